from .record_serialisers import LedgerJSONSerialiser, RecordJSONSerialiser

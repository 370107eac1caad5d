"""Exception types shared across the pipeline."""


class PixcapError(Exception):
    """Base class for all package-specific errors."""


class ImageFormatError(PixcapError):
    """File exists but is not a decodable PNG/JPEG image."""


class SegmentationError(PixcapError):
    """Invalid segmentation request (empty image, k larger than pixel count)."""


class FeatureFileError(PixcapError):
    """Base for feature-file format problems."""


class FeatureMagicError(FeatureFileError):
    """File does not start with the expected magic bytes."""


class FeatureVersionError(FeatureFileError):
    """Feature file written with an unsupported format version."""


class FeatureTruncatedError(FeatureFileError):
    """Feature file ends mid-record."""

    def __init__(self, record_index, message=None):
        self.record_index = record_index
        super().__init__(message or f"feature file truncated at record {record_index}")


class EmbedError(PixcapError):
    """Base for embedding-provider failures."""


class EmbedRequestError(EmbedError):
    """Transport-level failure talking to an embedding service."""


class EmbedStatusError(EmbedError):
    """Embedding service answered with a non-200 status."""

    def __init__(self, status, message=None):
        self.status = status
        super().__init__(message or f"embed service returned status {status}")


class EmbedResponseError(EmbedError):
    """Embedding service response body could not be parsed."""


class EmbedDimensionError(EmbedError):
    """Embedding vector length does not match the provider's declared dimension."""


class DatasetSchemaError(PixcapError):
    """Dataset JSON is missing required fields."""


class CheckpointError(PixcapError):
    """Parameter checkpoint is malformed or incompatible."""


class TrainingError(PixcapError):
    """Training aborted (e.g. non-finite loss)."""

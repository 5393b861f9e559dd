"""
Loading and validating instance files.

An instance file is a JSON or YAML document with the fields n, nu, c and the
optional nu_tilde and label. Rationals are "p/q" strings or integers.
"""

import os
from typing import Any, Dict

import jsonschema

from gmdual.core.error_handler import ValidationError
from gmdual.core.logging_config import get_logger
from gmdual.core.utils import load_structured_file
from gmdual.presentation.spectrum import SpectrumInstance
from gmdual.schemas import load_schema

# Initialize logger
logger = get_logger(__name__)


class InstanceLoader:
    """
    Validates instance documents against the instance schema.
    """

    def __init__(self):
        """
        Initialize the loader with its schema.
        """
        self.instance_schema = load_schema("instance_file")
        logger.debug("Loaded instance file schema")

    def validate_document(self, document: Any, source: str = "<document>") -> Dict[str, Any]:
        """
        Validate a parsed document against the schema.

        Args:
            document: Parsed JSON or YAML content
            source: Name used in error messages

        Returns:
            Dict[str, Any]: The validated document

        Raises:
            ValidationError: If the document does not conform to the schema
        """
        try:
            jsonschema.validate(instance=document, schema=self.instance_schema)
        except jsonschema.exceptions.ValidationError as e:
            location = "/".join(str(part) for part in e.absolute_path) or None
            error_msg = f"Instance file {source} failed schema validation: {e.message}"
            logger.error(error_msg)
            raise ValidationError(error_msg, field=location)
        return document

    def load(self, path: str) -> SpectrumInstance:
        """
        Load an instance file.

        Args:
            path (str): Path to a .json, .yaml or .yml file

        Returns:
            SpectrumInstance: The parsed instance (not yet spectrally validated)

        Raises:
            ValidationError: If the file is missing, unparsable, violates the
                schema, or has wrong lengths, c = 0 or zero denominators
        """
        logger.info(f"Loading instance file: {path}")

        if not os.path.isfile(path):
            error_msg = f"Instance file not found: {path}"
            logger.error(error_msg)
            raise ValidationError(error_msg, field="path", value=path)

        document = load_structured_file(path)
        self.validate_document(document, source=path)

        instance = SpectrumInstance.from_dict(document)
        if instance.label is None:
            instance = SpectrumInstance(
                n=instance.n,
                nu=instance.nu,
                c=instance.c,
                nu_tilde=instance.nu_tilde,
                label=os.path.splitext(os.path.basename(path))[0],
            )
        logger.info(f"Loaded instance {instance.label} (n={instance.n})")
        return instance


def load_instance(path: str) -> SpectrumInstance:
    """Load ``path`` with a fresh InstanceLoader."""
    return InstanceLoader().load(path)

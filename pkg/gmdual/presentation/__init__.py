"""
Operator presentation and connection of the Gauss-Manin system of one spectrum.
"""

from gmdual.presentation.spectrum import SpectrumInstance, ValidationReport, validate
from gmdual.presentation.instance_loader import InstanceLoader, load_instance
from gmdual.presentation.generators import GeneratorSet, build_generators
from gmdual.presentation.connection import ConnectionData, build_connection, curvature_check, is_flat
from gmdual.presentation.normal_form import Presentation, QCoefficients, normal_form, presentation_of, reduce
from gmdual.presentation.calibration import CalibrationResult, phi_calibrate
from gmdual.presentation.lattice import (
    LatticeMembership,
    lattice_membership,
    lattice_stability_check,
    jacobian_identity_check,
    check_grading,
)

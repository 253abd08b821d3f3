"""
overalg.validation.validator
============================

Validation of a parameter set against the rules attached to its parameters.

Notes
-----
Individual rules can validate values by themselves. The ``Validator`` aggregates the outcomes of
all rules of a ``ParameterSet`` so that every invalid value of a configuration is reported at
once instead of only the first one.

Classes
-------
ReportEntry
    Outcome of a single check.
ValidationRecorder
    Collect check outcomes and errors.
Checker
    Single check of one parameter against one rule.
Validator
    Validate all parameters of a set.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional

from overalg.core.errors.validation import CheckError, GlobalValidationError, ValidationError
from overalg.core.parameters import ParameterSet
from overalg.core.types import RuleProtocol

logger = logging.getLogger(__name__)


# --- Event Tracking -------------------------------------------------------------------------------

@dataclass
class ReportEntry:
    """
    Outcome of a single validation check.

    Attributes
    ----------
    rule : str
        Class name of the rule that was checked.
    target : str
        Name of the checked parameter.
    success : bool
        Whether the check passed.
    message : str
        Error message, or ``ValidationRecorder.SUCCESS_FLAG``.
    """
    rule: str
    target: str
    success: bool
    message: str = ""


class ValidationRecorder:
    """
    Collect check outcomes separately from their execution.

    Attributes
    ----------
    report : List[ReportEntry]
        One entry per executed check.
    errors : List[ValidationError]
        Errors of the failed checks, in execution order.
    """
    SUCCESS_FLAG = "PASSED"

    def __init__(self) -> None:
        self.report: List[ReportEntry] = []
        self.errors: List[ValidationError] = []

    def clear(self) -> None:
        """Forget previous outcomes."""
        self.report.clear()
        self.errors.clear()

    def record(self, rule: RuleProtocol, target: str, error: Optional[ValidationError] = None) -> None:
        """
        Register the outcome of a check.

        Parameters
        ----------
        rule : RuleProtocol
            Rule that was checked.
        target : str
            Name of the checked parameter.
        error : ValidationError, optional
            Error if the check failed.
        """
        if error is None:
            message = self.SUCCESS_FLAG
        else:
            self.errors.append(error)
            message = f"{target}: {error.message}"
        self.report.append(ReportEntry(type(rule).__name__, target, error is None, message))

    def has_errors(self) -> bool:
        """Whether at least one check failed."""
        return bool(self.errors)


# --- Validation Process ---------------------------------------------------------------------------

class Checker:
    """
    Single check of one parameter of a set against one of its rules.

    Parameters
    ----------
    rule : RuleProtocol
        Rule to apply.
    target : str
        Name of the parameter in the set.
    """
    def __init__(self, rule: RuleProtocol, target: str) -> None:
        self.rule = rule
        self.target = target

    def check(self, params: ParameterSet) -> ValidationError | None:
        """
        Apply the rule to the effective value of the target parameter.

        Returns
        -------
        ValidationError | None
            The error describing the failure, ``None`` if the check passes.
        """
        error = self.rule.get_error(params.get(self.target))
        if error is not None and not isinstance(error, ValidationError):
            error = ValidationError(str(error))
        return error


class Validator:
    """
    Validate every parameter of a set against its rules.

    Parameters
    ----------
    params : ParameterSet
        Parameters to validate.
    strict : bool, default False
        Raise ``GlobalValidationError`` when any check fails.

    Attributes
    ----------
    recorder : ValidationRecorder
        Outcomes of the last validation.

    Examples
    --------
    >>> params = ParameterSet(alpha=Param(0.5, rules=[RangeRule(gt=1)]))
    >>> Validator(params).validate()
    False
    """
    def __init__(self, params: ParameterSet, strict: bool = False) -> None:
        self.params = params
        self.strict = strict
        self.recorder = ValidationRecorder()

    def init_checks(self) -> List[Checker]:
        """One check per rule of each parameter, in declaration order."""
        return [Checker(rule, name) for name, param in self.params.items() for rule in param.rules]

    def validate(self) -> bool:
        """
        Run all checks and aggregate their outcomes.

        Returns
        -------
        bool
            ``True`` if all checks pass.

        Raises
        ------
        GlobalValidationError
            In strict mode, if any check fails.
        """
        self.recorder.clear()
        for chk in self.init_checks():
            try:
                error = chk.check(self.params)
            except Exception as exc:  # rule could not be executed
                error = CheckError(exc)
            self.recorder.record(chk.rule, chk.target, error)
        valid = not self.recorder.has_errors()
        logger.debug("Validated %d checks, %d failed", len(self.recorder.report),
                     len(self.recorder.errors))
        if self.strict and not valid:
            raise GlobalValidationError(
                [ValidationError(entry.message) for entry in self.recorder.report if not entry.success]
            )
        return valid

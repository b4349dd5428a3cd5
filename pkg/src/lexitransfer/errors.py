"""Exception hierarchy shared by all modules.

Every error carries a stable machine-readable ``code`` so the HTTP layer
and the CLI can map failures without string matching.
"""


class LexitransferError(Exception):
    code = "internal_error"

    def __init__(self, message: str = "", details=None):
        super().__init__(message or self.__class__.__name__)
        self.message = message or self.__class__.__name__
        self.details = details


class DuplicateLexeme(LexitransferError):
    code = "duplicate_lexeme"


class UnknownParadigm(LexitransferError):
    code = "unknown_paradigm"


class PosLanguageMismatch(LexitransferError):
    code = "pos_language_mismatch"


class NotFound(LexitransferError):
    code = "not_found"


class PriorityCollision(LexitransferError):
    code = "priority_collision"


class SameLanguage(LexitransferError):
    code = "same_language"


class NoSuchForm(LexitransferError):
    code = "no_such_form"


class StemMismatch(LexitransferError):
    code = "stem_mismatch"


class EmptyInput(LexitransferError):
    code = "empty_input"


class BudgetExhausted(LexitransferError):
    code = "budget_exhausted"


class BackendUnavailable(LexitransferError):
    code = "backend_unavailable"


class EmptyVariantList(LexitransferError):
    code = "empty_variant_list"


class ZeroTotal(LexitransferError):
    code = "zero_total"


class PhraseTooLong(LexitransferError):
    code = "phrase_too_long"


class FileUnreadable(LexitransferError):
    code = "file_unreadable"


class EncodingError(LexitransferError):
    code = "encoding_error"

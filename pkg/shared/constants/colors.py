class Colors:
    """
    Constantes de cores ANSI para saída no terminal.
    """
    # Cores regulares
    RED = "\033[0;31m"
    GREEN = "\033[0;32m"
    YELLOW = "\033[0;33m"
    GREY = "\033[0;37m"
    BOLD_RED = "\033[1;31m"

    # Reset
    RESET = "\033[0m"

    # Veredictos da linha de comando
    VERDICT_VALID = GREEN
    VERDICT_INVALID = RED

    # Cores de log
    LOG_DEBUG = GREY
    LOG_INFO = GREEN
    LOG_WARNING = YELLOW
    LOG_ERROR = RED
    LOG_CRITICAL = BOLD_RED

    _ANSI = {
        "RED": "\033[0;31m",
        "GREEN": "\033[0;32m",
        "YELLOW": "\033[0;33m",
        "GREY": "\033[0;37m",
        "BOLD_RED": "\033[1;31m",
        "RESET": "\033[0m",
    }

    @classmethod
    def disable(cls):
        """
        Desativa todas as cores (saída redirecionada para arquivo ou pipe).
        """
        for name in cls._ANSI:
            setattr(cls, name, "")
        cls._refresh_aliases()

    @classmethod
    def enable(cls):
        """
        Reativa todas as cores restaurando seus códigos ANSI.
        """
        for name, code in cls._ANSI.items():
            setattr(cls, name, code)
        cls._refresh_aliases()

    @classmethod
    def paint(cls, text: str, color: str) -> str:
        return f"{color}{text}{cls.RESET}"

    @classmethod
    def _refresh_aliases(cls):
        cls.VERDICT_VALID = cls.GREEN
        cls.VERDICT_INVALID = cls.RED
        cls.LOG_DEBUG = cls.GREY
        cls.LOG_INFO = cls.GREEN
        cls.LOG_WARNING = cls.YELLOW
        cls.LOG_ERROR = cls.RED
        cls.LOG_CRITICAL = cls.BOLD_RED

from mahonian.words import parse_word


def W(s):
    """Digit string to word tuple."""
    return parse_word(s)

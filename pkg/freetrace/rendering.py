"""Text rendering of monomials and polynomials in the command-line grammar."""
from exactlinalg.rational import format_rational


def render_monomial(m):
    if m.is_unit():
        return '1'
    parts = ['Tr(' + ' '.join(f'x{v}' for v in factor) + ')' for factor in m.traces]
    text = ''.join(parts)
    if m.word:
        word = ' '.join(f'x{v}' for v in m.word)
        text = f'{text} {word}' if text else word
    return text


def _render_term(m, magnitude):
    if magnitude == 1:
        return render_monomial(m)
    if m.is_unit():
        return format_rational(magnitude)
    return f'{format_rational(magnitude)} {render_monomial(m)}'


def render_polynomial(f):
    """Render like ``Tr(x1)Tr(x2) - Tr(x1 x2)``; the zero polynomial is ``0``."""
    if f.is_zero():
        return '0'
    pieces = []
    for index, (m, c) in enumerate(f.terms):
        body = _render_term(m, abs(c))
        if index == 0:
            pieces.append(f'-{body}' if c < 0 else body)
        else:
            pieces.append(f' - {body}' if c < 0 else f' + {body}')
    return ''.join(pieces)

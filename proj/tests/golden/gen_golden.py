#!/usr/bin/env python3
"""Writes the golden core expansions used by notation_test.

Independent of the C++ definition table: every abbreviation is re-stated here
as a closed lambda term (text), instantiated by string assembly and applied
to its arguments without any reduction. The output uses only lambda,
application, decorated variables and the subset/iota constants.
"""
import pathlib
import sys

E, T = "e", "t"


def fn(*ts):
    out = ts[-1]
    for a in reversed(ts[:-1]):
        out = (a, out)
    return out


def tstr(ty):
    if isinstance(ty, str):
        return ty
    return "<" + tstr(ty[0]) + tstr(ty[1]) + ">"


def dec(ty):
    return "^" + ty if isinstance(ty, str) else "^{" + tstr(ty) + "}"


def v(name, ty):
    return name + dec(ty)


def lam(name, ty, body):
    return "(\\" + name + dec(ty) + ". " + body + ")"


def ap(f, *args):
    out = f
    for a in args:
        out = "(" + out + " " + a + ")"
    return out


def sub(sigma, f, g):
    return "(" + f + " <=_{" + tstr(sigma) + "} " + g + ")"


def pred(s):
    return (s, T)


TOP = sub(T, lam("p", T, v("p", T)), lam("p", T, v("p", T)))


def ALL(s):
    return lam("X", pred(s), sub(s, lam("y", s, TOP), v("X", pred(s))))


BOT = sub(T, lam("p", T, TOP), lam("p", T, v("p", T)))
NEG = lam("p", T, sub(T, lam("r", T, v("p", T)), lam("r", T, BOT)))


def EX(s):
    X = v("X", pred(s))
    return lam("X", pred(s), ap(NEG, ap(ALL(s), lam("y", s, ap(NEG, ap(X, v("y", s)))))))


IMP = lam("p", T, lam("q", T, sub(T, lam("r", T, v("p", T)), lam("r", T, v("q", T)))))
OR = lam("p", T, lam("q", T, ap(IMP, ap(NEG, v("p", T)), v("q", T))))
AND = lam("p", T, lam("q", T, ap(NEG, ap(OR, ap(NEG, v("p", T)), ap(NEG, v("q", T))))))
IFF = lam("p", T, lam("q", T, ap(AND, ap(IMP, v("p", T), v("q", T)), ap(IMP, v("q", T), v("p", T)))))


def EQ(s):
    Z = pred(s)
    x, y = v("x", s), v("y", s)
    return lam("x", s, lam("y", s, sub(Z, lam("Z", Z, ap(v("Z", Z), x)), lam("Z", Z, ap(v("Z", Z), y)))))


def EQUIV1(s):
    # relations of one argument place: quantified coextension
    P = pred(s)
    X, Y, z = v("X", P), v("Y", P), v("z", s)
    return lam("X", P, lam("Y", P, ap(ALL(s), lam("z", s, ap(IFF, ap(X, z), ap(Y, z))))))


def MINUS1(s):
    P = pred(s)
    X, Y, z = v("X", P), v("Y", P), v("z", s)
    return lam("X", P, lam("Y", P, lam("z", s, ap(AND, ap(X, z), ap(NEG, ap(Y, z))))))


def ONE(s):
    P = pred(s)
    X, y, z = v("X", P), v("y", s), v("z", s)
    uniq = ap(ALL(s), lam("z", s, ap(IMP, ap(X, z), ap(EQ(s), y, z))))
    return lam("X", P, ap(EX(s), lam("y", s, ap(AND, ap(X, y), uniq))))


def PLUS(s):
    P = pred(s)
    N = (P, T)
    m, n, X, Y = v("m", N), v("n", N), v("X", P), v("Y", P)
    body = ap(AND, sub(s, Y, X), ap(AND, ap(m, Y), ap(n, ap(MINUS1(s), X, Y))))
    return lam("m", N, lam("n", N, lam("X", P, ap(EX(P), lam("Y", P, body)))))


def IOTA(s):
    return "iota_{" + tstr(s) + "}"


def class_abstraction(x, s, body):
    P = pred(s)
    X, y = v("X", P), v("y", s)
    classical = ap(ALL(s), lam("y", s, ap(OR, ap(EQ(T), ap(X, y), TOP), ap(EQ(T), ap(X, y), BOT))))
    coext = ap(EQUIV1(s), X, lam(x, s, body))
    return ap(IOTA(P), lam("X", P, ap(AND, classical, coext)))


GOLDEN = {
    "one_plus_one_t.txt": ap(PLUS(T), ONE(T), ONE(T)),
    "class_abstraction_bot_e.txt": class_abstraction("x", E, BOT),
    "top.txt": TOP,
    "forall_e.txt": ALL(E),
}


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).parent)
    for name, text in GOLDEN.items():
        (out / name).write_text(text + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Regenerate src/aronhold_tables.cpp from first principles.

The two fundamental SL(3) invariants of a ternary cubic (degrees 4 and 6 in
the ten coefficients) are derived here rather than copied from a reference:
a polynomial in the coefficients is invariant iff it is killed by the
infinitesimal action of the four elementary shears that generate sl(3)
together with the torus. Solving that linear condition on the isobaric
coefficient monomials of each degree leaves a one-dimensional space; the
scale is then pinned on the family x^3 + y^3 + z^3 + 6*lam*xyz, where the
invariants must come out as

    S = lam - lam^4          T = 1 - 20 lam^3 - 8 lam^6

so that the discriminant combination T^2 + 64 S^3 equals (1 + 8 lam^3)^3.

Requires sympy. The build consumes the committed C++ file; run this only to
regenerate it after a representation change:

    python3 scripts/derive_invariants.py > src/aronhold_tables.cpp
"""

from itertools import combinations_with_replacement
import sys

import sympy as sp

x, y, z, t, lam = sp.symbols("x y z t lam")

# Monomial order fixed project-wide (see forms.hpp).
MONS = [(3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1),
        (1, 0, 2), (0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3)]
NM = len(MONS)
a = sp.symbols("a0:10")


def mon_expr(e):
    return x ** e[0] * y ** e[1] * z ** e[2]


def infinitesimal(sub):
    """d/dt at t=0 of the coefficient vector under the substitution `sub`."""
    F = sum(a[i] * mon_expr(MONS[i]) for i in range(NM))
    Fs = sp.expand(F.subs(sub, simultaneous=True))
    P = sp.Poly(Fs, x, y, z)
    return [sp.expand(sp.diff(P.coeff_monomial(mon_expr(e)), t).subs(t, 0))
            for e in MONS]


SHEARS = [{x: x + t * y}, {y: y + t * z}, {y: y + t * x}, {z: z + t * y}]
GENS = [infinitesimal(s) for s in SHEARS]


def basis_monomials(deg):
    """Coefficient monomials of degree `deg` with balanced exponent weight."""
    out = []
    for comb in combinations_with_replacement(range(NM), deg):
        w = [0, 0, 0]
        for i in comb:
            for k in range(3):
                w[k] += MONS[i][k]
        if w == [deg, deg, deg]:
            out.append(comb)
    return out


def derive(deg):
    basis = basis_monomials(deg)
    cs = sp.symbols(f"c0:{len(basis)}")
    cand = sum(cs[i] * sp.prod([a[j] for j in basis[i]])
               for i in range(len(basis)))
    eqs = []
    for g in GENS:
        D = sp.expand(sum(g[m] * sp.diff(cand, a[m]) for m in range(NM)))
        eqs.extend(sp.Poly(D, *a).coeffs())
    (vals,) = sp.linsolve(eqs, cs)
    frees = sorted(set().union(*[v.free_symbols for v in vals]) & set(cs),
                   key=lambda s: s.name)
    assert len(frees) == 1, f"invariant space at degree {deg} not a line"
    return sp.expand(cand.subs(dict(zip(cs, vals))).subs(frees[0], 1))


def normalize(raw, target):
    family = {a[0]: 1, a[6]: 1, a[9]: 1, a[4]: 6 * lam,
              a[1]: 0, a[2]: 0, a[3]: 0, a[5]: 0, a[7]: 0, a[8]: 0}
    scale = sp.simplify(sp.expand(raw.subs(family)) / target)
    assert scale.is_number and scale != 0
    fixed = sp.expand(raw / scale)
    assert sp.expand(fixed.subs(family) - target) == 0
    return fixed


def terms_over_common_denominator(expr):
    P = sp.Poly(expr, *a)
    terms = [(sp.Rational(c), mono) for mono, c in P.terms()]
    den = sp.ilcm(*[c.q for c, _ in terms])
    rows = [(int(c * den), list(map(int, m))) for c, m in terms]
    rows.sort(key=lambda cm: cm[1], reverse=True)
    return int(den), rows


def emit(name, den, rows, out):
    out.write(f"const long long k{name}Denominator = {den};\n")
    out.write(f"const InvariantTerm k{name}Terms[] = {{\n")
    for c, m in rows:
        exps = ", ".join(str(e) for e in m)
        out.write(f"    {{{c}LL, {{{exps}}}}},\n")
    out.write("};\n")
    out.write(f"const std::size_t k{name}Count = "
              f"sizeof(k{name}Terms) / sizeof(k{name}Terms[0]);\n\n")


def main():
    S = normalize(derive(4), lam - lam ** 4)
    T = normalize(derive(6), 1 - 20 * lam ** 3 - 8 * lam ** 6)

    family = {a[0]: 1, a[6]: 1, a[9]: 1, a[4]: 6 * lam,
              a[1]: 0, a[2]: 0, a[3]: 0, a[5]: 0, a[7]: 0, a[8]: 0}
    disc = sp.expand(T.subs(family) ** 2 + 64 * S.subs(family) ** 3)
    assert sp.expand(disc - (1 + 8 * lam ** 3) ** 3) == 0

    s_den, s_rows = terms_over_common_denominator(S)
    t_den, t_rows = terms_over_common_denominator(T)

    out = sys.stdout
    out.write(
        "// Generated by scripts/derive_invariants.py; do not edit by hand.\n"
        "// Integer term tables of the degree-4 and degree-6 coefficient\n"
        "// invariants of a ternary cubic, over one common denominator each.\n"
        "\n"
        "#include \"cubicrank/aronhold_tables.hpp\"\n"
        "\n"
        "namespace cubicrank {\n"
        "\n")
    emit("S", s_den, s_rows, out)
    emit("T", t_den, t_rows, out)
    out.write("} // namespace cubicrank\n")


if __name__ == "__main__":
    main()

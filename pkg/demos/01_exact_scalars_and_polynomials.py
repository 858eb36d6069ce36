"""Exact arithmetic building blocks: Gaussian rationals and polynomials.

Everything downstream (brackets, module actions, span closures) runs on
these two layers, with zero floating point anywhere.
"""

from cartanfree import I, T, parse_polynomial, parse_scalar, scalar

# Scalars are exact complex numbers with rational parts.
x = parse_scalar("-1/2+2/3i")
print("parsed      :", x)
print("re, im      :", x.re, ",", x.im)
print("inverse     :", x.inverse())
print("x * 1/x     :", x * x.inverse())

# (1/2 + i)(1/2 - i) = 1/4 + 1
y = scalar("1/2") + I
print("(1/2+i)(1/2-i) =", y * y.conjugate())

# Rendering is canonical and re-parses to the same value.
assert parse_scalar(str(x)) == x

# Polynomials in t carry the module vectors.
f = parse_polynomial("2*t^3 - 1/2*t + 1")
print("\nf           :", f)
print("f(t - 3/2)  :", f.shift(scalar("3/2")))
print("f * (t - 2) :", f.mul_linear(2))
print("degree, lead:", f.degree, ",", f.leading)

# Shifting is exact and composes additively.
g = (T * T + T).shift(scalar("3/2"))
print("\n(t^2 + t) shifted by 3/2:", g)
assert g == parse_polynomial("t^2 - 2*t + 3/4")

# Multivariate polynomials carry tensor-product vectors.
h = parse_polynomial("t1^2*t2 + 3*t2")
print("\nmultivariate:", h, "with per-variable degrees", h.degrees())

"""Exact F_p linear algebra and Groebner bases, the two engines underneath."""
from froblab import FpMatrix, PolyRing, buchberger, normal_form, std_monomials
from froblab.fp import kernel, rank

# rank and kernel over F_5
A = FpMatrix([[1, 2, 3], [2, 4, 6], [0, 1, 1]], 5)
print("rank A =", rank(A))
print("kernel basis:\n", kernel(A).a)

# a Groebner basis of the bracket power (x^4, y^4, u^4, v^4) + (xy - uv) in char 2
S = PolyRing(2, ["X", "Y", "U", "V"])
G = buchberger([S(g) for g in ["X^4", "Y^4", "U^4", "V^4", "X*Y - U*V"]])
print("basis size:", len(G.elems))
print("normal form of X^3*Y^3:", normal_form(S("X^3*Y^3"), G))
print("length of the quotient:", len(std_monomials(G).monomials))

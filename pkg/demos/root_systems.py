"""Tour of the root-system layer: invariants, exact Gram arithmetic, and the
dual strange formula, for every implemented family."""

from fractions import Fraction

from corelat import rootsys

print("type   h   g^   r  f  c_i            exponents")
for name in ["A2", "A3", "B2", "B3", "C3", "D4", "E6", "E7", "E8", "F4", "G2"]:
    rs = rootsys.build_named(name)
    print(f"{name:4} {rs.coxeter_number:3} {rs.dual_coxeter_number:3}  "
          f"{rs.ratio_r:2} {rs.index_of_connection:2}  "
          f"{str(rs.highest_root_coeffs):14} {rs.exponents}")

print()
print("The sum of the fundamental coweights rho^ has exact squared length")
print("r * g^ * n (h + 1) / 12 in every type:")
for name in ["A5", "B4", "C6", "D5", "E7", "F4", "G2"]:
    rs = rootsys.build_named(name)
    lhs = rootsys.norm2(rs, rs.rho_check_coords)
    rhs = Fraction(rs.ratio_r * rs.dual_coxeter_number * rs.rank * (rs.coxeter_number + 1), 12)
    print(f"  {name}: |rho^|^2 = {lhs} = {rhs}  ({'ok' if lhs == rhs else 'MISMATCH'})")

print()
g2 = rootsys.build_named("G2")
print("G2 positive roots by height (coefficients over the simple roots):")
for i in range(1, g2.coxeter_number):
    layer = [r.coeffs for r in rootsys.roots_of_height(g2, i)]
    print(f"  height {i}: {layer}")

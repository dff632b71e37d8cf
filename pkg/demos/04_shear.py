"""The shear [[1,1],[0,1]]: a single eigenline and linear degree growth.

On P^2 the degrees go 2, 3, 4, ... instead of 2^n, so the map is not
stable there.  On P^1 x P^1 the eigenline (1,0) is already a ray and the
map is stable as it stands.  The stabilizer starts from P^2 and adds the
eigenline together with enough neighbours.
"""

from toristab import (check_as, degree_sequence, stabilize, standard_p1xp1,
                      standard_p2)

A = [[1, 1], [0, 1]]
rep = check_as(A, standard_p2())
print("P^2:", rep.verdict.value, "witness", rep.witness)
print("degrees:", list(degree_sequence(A, 10).degrees))
print("P^1 x P^1:", check_as(A, standard_p1xp1()).verdict.value)

out = stabilize(A, standard_p2())
print("stabilized from P^2:", out.fan, "->", out.as_report.verdict.value)

# frozen_values.py
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent exact computations whose results are frozen in the C++ tests.

Run with `python3 tests/oracle/frozen_values.py`; it only needs the standard
library.
"""

from fractions import Fraction as F
from itertools import permutations, product

A = [[F(9, 10), F(1, 10)], [F(1, 10), F(9, 10)]]
E = [[F(4, 5), F(1, 5)], [F(1, 5), F(4, 5)]]
PI = [F(1, 2), F(1, 2)]


def hmm_prob(word):
    """Sum over hidden paths: emit at the current state, then move."""
    total = F(0)
    for path in product(range(2), repeat=len(word)):
        w = PI[path[0]] * E[path[0]][word[0]]
        for i in range(1, len(word)):
            w *= A[path[i - 1]][path[i]] * E[path[i]][word[i]]
        total += w
    return total


def words(max_len):
    out = []
    for n in range(max_len + 1):
        out.extend(product(range(2), repeat=n))
    return out


def marginal(table_n, u):
    return sum(hmm_prob(u + s) for s in product(range(2), repeat=table_n - len(u)))


def leibniz(m):
    n = len(m)
    total = F(0)
    for p in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if p[i] > p[j]:
                    sign = -sign
        term = F(sign)
        for i in range(n):
            term *= m[i][p[i]]
        total += term
    return total


def main():
    for w in [(0, 1), (0, 1, 0), (1, 1, 0, 1)]:
        print("hmm p", "".join(map(str, w)), hmm_prob(w))
    # 3x3 Hankel minor on {e,0,1} x {e,0,1} of the n=5 table.
    ws = words(1)
    h = [[marginal(5, w + v) for w in ws] for v in ws]
    print("P11 det", leibniz(h))
    # First Markov witness in scan order: split k = max(|v|,|w|), letter a,
    # rows u (|u| <= n-1-k), columns v.a (|v| <= k), relative to the first
    # nonzero entry.
    n = 5
    for k in range(n):
        us = words(n - 1 - k)
        vs = words(k)
        for a in range(2):
            m = [[marginal(n, v + (a,) + u) for v in vs] for u in us]
            for (r, c) in [(r, c) for r in range(len(us)) for c in range(len(vs))]:
                if m[r][c] != 0:
                    r0, c0 = r, c
                    break
            for r in range(len(us)):
                for c in range(len(vs)):
                    if r == r0 or c == c0:
                        continue
                    det = m[r0][c0] * m[r][c] - m[r0][c] * m[r][c0]
                    if det != 0:
                        print("markov witness rows", us[r0], us[r], "cols", vs[c0] + (a,), vs[c] + (a,), det)
                        return


if __name__ == "__main__":
    main()

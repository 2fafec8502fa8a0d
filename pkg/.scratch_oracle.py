"""Scratch oracle: brute-force every derived value before freezing into tests.

Independent of the package under construction; deleted before delivery.
"""
import math
from fractions import Fraction


def brute_solve(a, b):
    """Scan both equations exhaustively; return (tag, x, y) list."""
    k = (a - 1) * (b - 1) // 2
    out = []
    for tag in (0, 1):
        t = k - tag
        if t < 0:
            continue
        for x in range(b if b > 0 else 1):
            rem = t - a * x
            if rem >= 0 and b > 0 and rem % b == 0 and rem // b < max(a, 1):
                out.append((tag, x, rem // b))
    return out


def fib(n):
    if n == -1:
        return 1
    if n == -2:
        return -1
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def B(n):
    t = [0, 1]
    while len(t) <= n:
        t.append(6 * t[-1] - t[-2])
    return t[n]


def C(n):
    t = [1, 3]
    while len(t) <= n:
        t.append(6 * t[-1] - t[-2])
    return t[n]


def baux(n):
    t = [0, 0, 2]
    while len(t) <= n:
        t.append(6 * t[-1] - t[-2] + 2)
    return t[n]


print("== solver examples ==")
for a, b in [(5, 8), (1, 7), (21, 34), (3, 5), (2, 3), (1, 1), (1, 9)]:
    print((a, b), brute_solve(a, b))

print("== half products ==")
print((5, 8), 4 * 7 // 2, (21, 34), 20 * 33 // 2)

print("== ext_gcd sanity ==")
print("5*-3+8*2 =", 5 * -3 + 8 * 2)
print("21*13 mod 34 =", 21 * 13 % 34)

print("== fib values ==")
print([fib(i) for i in range(11)], "F96 digits:", len(str(fib(96))))

print("== fiblike (2,3) ==", [fib(n - 2) * 2 + fib(n - 1) * 3 for n in range(1, 7)])
print("== fiblike (1,4) n=3 ==", fib(1) * 1 + fib(2) * 4)

print("== balancing ==", [B(n) for n in range(9)])
print("== lucas-balancing ==", [C(n) for n in range(6)])
print("== b_aux ==", [baux(n) for n in range(6)])
print("b4-b3 =", baux(4) - baux(3), "2*B3 =", 2 * B(3))

print("== cube sums ==")
def cube_sum(m):
    return sum(fib(i) ** 3 for i in range(1, m + 1))
def cube_alt(m):
    return sum((-1) ** i * fib(i) ** 3 for i in range(1, m + 1))
def cube_sum_closed(m):
    return Fraction(fib(3 * m + 3) + fib(3 * m), 4) - fib(m + 1) ** 3 - fib(m) ** 3 + Fraction(1, 2)
def cube_alt_closed(m):
    s = (-1) ** m
    return Fraction(s * fib(3 * m + 3) - s * fib(3 * m), 4) - s * fib(m + 1) ** 3 + s * fib(m) ** 3 + Fraction(1, 2)
for m in range(1, 31):
    assert cube_sum(m) == cube_sum_closed(m), m
    assert cube_alt(m) == cube_alt_closed(m), (m, cube_alt(m), cube_alt_closed(m))
print("closed forms match direct sums for m<=30")
print("sum m=1,3:", cube_sum(1), cube_sum(3), "alt m=3,4:", cube_alt(3), cube_alt(4))

print("== fib squares ==")
for n in [2, 3, 7, 4]:
    a, b = fib(n) ** 2, fib(n + 1) ** 2
    print(n, (a, b), brute_solve(a, b))

print("== fib cubes ==")
for m in [3, 4, 5, 6]:
    a, b = fib(m) ** 3, fib(m + 1) ** 3
    sols = brute_solve(a, b)
    x_claim = -cube_alt(m) if m % 2 else cube_alt(m) - 1
    y_claim = cube_sum(m - 1) - 1
    print(m, (a, b), sols, "claim:", (0 if m % 2 else 1, x_claim, y_claim))

print("== theorem 2.1 rows k=1 ==")
F = fib
k = 1
rows21 = [
    (6 * k, (F(6 * k - 1) - 1) // 2, (F(6 * k - 1) - 1) // 2, 0),
    (6 * k + 1, (F(6 * k + 1) - 1) // 2, (F(6 * k - 1) - 1) // 2, 0),
    (6 * k + 2, (F(6 * k + 1) - 1) // 2, (F(6 * k + 1) - 1) // 2, 0),
    (6 * k + 3, (F(6 * k + 2) - 1) // 2, (F(6 * k + 2) - 1) // 2, 1),
    (6 * k + 4, (F(6 * k + 4) - 1) // 2, (F(6 * k + 2) - 1) // 2, 1),
    (6 * k + 5, (F(6 * k + 4) - 1) // 2, (F(6 * k + 4) - 1) // 2, 1),
]
for m, x, y, tag in rows21:
    a, b = F(m), F(m + 1)
    lhs = tag + a * x + b * y
    rhs = (a - 1) * (b - 1) // 2
    print(m, lhs == rhs, lhs, brute_solve(a, b) == [(tag, x, y)])

print("== theorem 2.2 rows, k=0..2 ==")
for k in range(3):
    rows22 = [
        (6 * k + 1, (F(6 * k + 2) - 1) // 2, (F(6 * k - 1) - 1) // 2, 0),
        (6 * k + 2, (F(6 * k + 2) - 1) // 2, (F(6 * k + 1) - 1) // 2, 0),
        (6 * k + 3, (F(6 * k + 4) - 1) // 2, (F(6 * k + 1) - 1) // 2, 0),
        (6 * k + 4, (F(6 * k + 5) - 1) // 2, (F(6 * k + 2) - 1) // 2, 1),
        (6 * k + 5, (F(6 * k + 5) - 1) // 2, (F(6 * k + 4) - 1) // 2, 1),
        (6 * k, (F(6 * k + 1) - 1) // 2, (F(6 * k - 2) - 1) // 2, 1),
    ]
    for m, x, y, tag in rows22:
        a, b = F(m), F(m + 2)
        lhs = tag + a * x + b * y
        rhs_num = (a - 1) * (b - 1)
        ok = rhs_num % 2 == 0 and lhs == rhs_num // 2
        solver = None
        if a >= 1 and b >= 1 and x >= 0 and y >= 0 and math.gcd(a, b) == 1:
            solver = brute_solve(a, b) == [(tag, x, y)]
        print(f"k={k} m={m}", ok, "solver:", solver)

print("== balancing-consecutive n=1..4 ==")
for n in range(1, 5):
    a, b = B(2 * n - 1), B(2 * n)
    x, y = (B(2 * n - 1) - 1) // 2, baux(2 * n - 1)
    print("F1", n, brute_solve(a, b) == [(0, x, y)], (a, b, x, y))
    a, b = B(2 * n), B(2 * n + 1)
    x, y = baux(2 * n + 1), (B(2 * n - 1) - 1) // 2
    print("F2", n, brute_solve(a, b) == [(1, x, y)], (a, b, x, y))

print("== davala families n=1..3 (oracle-checked via identity) ==")
def check(a, b, tag, x, y):
    ok_id = tag + a * x + b * y == (a - 1) * (b - 1) // 2 and (a - 1) * (b - 1) % 2 == 0
    ok_solver = None
    if min(a, b) < 10**6 and x >= 0 and y >= 0 and math.gcd(a, b) == 1:
        ok_solver = brute_solve(a, b) == [(tag, x, y)]
    return ok_id, ok_solver
for n in range(1, 4):
    sC4 = lambda hi: sum(C(4 * i) for i in range(1, hi + 1))
    sC2 = lambda hi: sum(C(2 * i) for i in range(1, hi + 1))
    sC2alt = lambda hi: sum((-1) ** i * C(2 * i) for i in range(1, hi + 1))
    sC2from0 = lambda hi: sum(C(2 * i) for i in range(0, hi + 1))
    print("D1", n, check(B(4 * n - 3), B(4 * n - 1), 0, sC4(n - 1), sC4(n - 1)))
    print("D2", n, check(B(4 * n - 1), B(4 * n + 1), 1, sC4(n), sC4(n - 1)))
    assert B(4 * n) % 6 == 0 and B(4 * n + 2) % 6 == 0 and B(4 * n - 2) % 6 == 0
    print("D3", n, check(B(4 * n) // 6, B(4 * n + 2) // 6, 1, sC2alt(2 * n), sC4(n - 1)))
    print("D4", n, check(B(4 * n - 2) // 6, B(4 * n) // 6, 0, sC4(n - 1), sC2alt(2 * n - 2)))
    print("D5", n, check(B(n), C(n), 0, B(n - 1) + baux(n - 1), baux(n)))
    print("D6", n, check(C(2 * n - 1), C(2 * n), 1, B(2 * n) - sC2from0(n - 1), sC2(n - 1)))
    print("D7", n, check(C(2 * n), C(2 * n + 1), 0, sC2(n), B(2 * n) - sC2from0(n - 1)))

print("== selectors ==")
def sel_odd(u, v, parity):
    hits = [r for r in range(1, u) if r % 2 == (1 if parity == "odd" else 0)
            and (v * r % u in (1 % u, (u - 1) % u))]
    return hits
print(sel_odd(3, 5, "odd"), sel_odd(3, 5, "even"), sel_odd(5, 1, "odd"))
def sel_even(u, v, k):
    hits = [r for r in range(1, u + 1) if r % 2 == 1 and ((v * r - k) % (2 * u) == 0 or (v * r + k) % (2 * u) == 0)]
    return hits
print(sel_even(2, 3, 1), sel_even(2, 1, 1), sel_even(4, 3, 5))

print("== theta / gamma ==")
def theta(a, b):
    g = math.gcd(a, b)
    return pow(a // g, -1, b // g)
def gamma_direct(a, b):
    g = math.gcd(a, b)
    sols = brute_solve(a // g, b // g)
    assert len(sols) == 1, (a, b, sols)
    return sols[0][0]
print("theta(5,3)", theta(5, 3), "theta(2,3)", theta(2, 3), "theta(6,4)", theta(6, 4))
for a, b in [(1, 7), (5, 8), (10, 16), (3, 5), (2, 3), (7, 14)]:
    print("gamma", (a, b), gamma_direct(a, b))

print("== gamma rows ==")
for k in (1, 3, 4, 7):
    bits = [gamma_direct(k, n) for n in range(1, 4 * k + 1)]
    print(k, bits[: 2 * k])

print("== density small ==")
for x in (2, 3):
    tot = zer = ct = cz = 0
    for a in range(1, x + 1):
        for b in range(a, x + 1):
            bit = gamma_direct(a, b)
            tot += 1
            zer += bit == 0
            if math.gcd(a, b) == 1:
                ct += 1
                cz += bit == 0
    print(x, Fraction(zer, tot), Fraction(cz, ct))

print("== delta examples ==")
arith = [3 + 4 * i for i in range(10)]
print("arith", [gamma_direct(arith[i], arith[i + 1]) for i in range(9)])
geom = [2 * 3 ** i for i in range(6)]
print("geom", [gamma_direct(geom[i], geom[i + 1]) for i in range(5)])
cust = [5]
for _ in range(5):
    cust.append(2 * cust[-1] - 1)
print("custom", [gamma_direct(cust[i], cust[i + 1]) for i in range(5)])

print("== theta sum identity, odd k ==")
bad = 0
for k in range(3, 100, 2):
    for s in range(2, k):
        if math.gcd(s, k) == 1 and k % s != 0:
            if theta(s, k) + theta(k - s, k) != k:
                bad += 1
print("violations:", bad)

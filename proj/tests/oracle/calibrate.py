"""Brute-force oracle runs used to fix the verification thresholds.

Independent of the C++ implementation: numpy FFT on very fine grids plus
direct integer autocorrelation. Run: python3 tests/oracle/calibrate.py
"""
import math
import numpy as np


def grs(count):
    return np.array([(-1) ** bin(n & (n >> 1)).count("1") for n in range(count)], dtype=np.int64)


def values(coeffs, m, offset=0.0):
    k = np.arange(len(coeffs))
    tw = np.exp(2j * np.pi * k * offset / m)
    buf = np.zeros(m, dtype=complex)
    buf[: len(coeffs)] = coeffs * tw
    return np.fft.ifft(buf) * m


def autocorr(u):
    n = len(u)
    return np.array([int(np.dot(u[: n - k], u[k:])) for k in range(n)])


def main():
    print("RS non-flatness oracle (L2-normalized X_n):")
    for n in range(4, 17):
        u = grs(2 ** n) / 2 ** (n / 2)
        m = 2 ** (n + 6)
        mag = np.abs(values(u, m, 0.5))
        l1dev = np.mean(np.abs(mag - 1))
        l2dev = math.sqrt(np.mean((mag - 1) ** 2))
        mahler = math.exp(np.mean(np.log(mag)))
        print(f"  n={n:2d} |X|-1 L1={l1dev:.6f} L2={l2dev:.6f} M={mahler:.6f} |M-1|={abs(mahler-1):.6f}")

    print("Truncated RS L1 and exact L4 (normalized by sqrt(N+1)):")
    for e in range(2, 17):
        for N in (2 ** e - 1, 2 ** e, 2 ** e + 1, 3 * 2 ** (e - 1)):
            u = grs(N + 1).astype(float)
            m = 2 ** (e + 6)
            mag = np.abs(values(u / math.sqrt(N + 1), m))
            l1 = np.mean(mag)
            if e <= 14:
                c = np.rint(np.fft.irfft(np.abs(np.fft.rfft(u, 4 * m)) ** 2)[: N + 1]).astype(np.int64)
                l4 = (c[0] ** 2 + 2 * np.sum(c[1:] ** 2)) / c[0] ** 2
            else:
                l4 = float("nan")
            print(f"  N={N:6d} L1={l1:.6f} L4^4={l4:.6f} merit={1/(l4-1):.4f}")

    print("Mauduit-Sarkozy correlation bounds for GRS prefixes:")
    for e in (4, 6, 8, 10, 12, 14):
        N = 2 ** e
        u = grs(N).astype(float)
        c = np.rint(np.fft.irfft(np.abs(np.fft.rfft(u, 4 * N)) ** 2)[:N]).astype(np.int64)
        k = np.arange(1, N)
        nu = np.abs(c[1:]) / N
        bound = 2 * k / N + 4 * k / N * np.log2(2 * N / k)
        print(f"  N={N} max nu={nu.max():.6f} worst bound slack={np.min(bound - nu):.6e}")

    print("Fekete exact L4^4 normalized by (p-1):")
    for p in (5, 7, 13, 101, 1009, 10007, 20011):
        u = np.array([0] + [pow(k, (p - 1) // 2, p) for k in range(1, p)], dtype=np.int64)
        u[u == p - 1] = -1
        c = np.rint(np.fft.irfft(np.abs(np.fft.rfft(u.astype(float), 4 * p)) ** 2)[:p]).astype(np.int64)
        l4 = (c[0] ** 2 + 2 * np.sum(c[1:] ** 2)) / c[0] ** 2
        m = 1 << (int(p).bit_length() + 6)
        mag = np.abs(values(u.astype(float), m))
        bound = 2 / math.pi * math.sqrt(p) * math.log(math.log(p)) if p >= 17 else float("nan")
        print(f"  p={p} L4^4={l4:.6f} |dev 5/3|={abs(l4-5/3):.6f} gridsup={mag.max():.4f} montgomery={bound:.4f}")


if __name__ == "__main__":
    main()

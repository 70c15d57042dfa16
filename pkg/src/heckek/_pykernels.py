"""Pure-Python versions of the hot loops. The compiled module mirrors these."""


def snf_diagonal(rows):
    """Nonzero elementary divisors d_1 | d_2 | ... of an integer matrix."""
    a = [list(map(int, r)) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    divs = []
    for t in range(min(m, n)):
        while True:
            best = 0
            bi = bj = -1
            for i in range(t, m):
                ri = a[i]
                for j in range(t, n):
                    v = ri[j]
                    if v and (best == 0 or abs(v) < best):
                        best, bi, bj = abs(v), i, j
            if best == 0:
                return divs
            if bi != t:
                a[t], a[bi] = a[bi], a[t]
            if bj != t:
                for r in a:
                    r[t], r[bj] = r[bj], r[t]
            p = a[t][t]
            rt = a[t]
            clean = True
            for i in range(t + 1, m):
                ri = a[i]
                v = ri[t]
                if v:
                    q = v // p
                    for j in range(t, n):
                        if rt[j]:
                            ri[j] -= q * rt[j]
                    if ri[t]:
                        clean = False
            for j in range(t + 1, n):
                v = rt[j]
                if v:
                    q = v // p
                    for r in a[t:]:
                        if r[t]:
                            r[j] -= q * r[t]
                    if rt[j]:
                        clean = False
            if not clean:
                continue
            bad = -1
            for i in range(t + 1, m):
                ri = a[i]
                for j in range(t + 1, n):
                    if ri[j] % p:
                        bad = i
                        break
                if bad >= 0:
                    break
            if bad < 0:
                break
            rb = a[bad]
            for j in range(t, n):
                rt[j] += rb[j]
        divs.append(abs(a[t][t]))
    return divs


def commuting_indices(images, signs, w_image, w_signs):
    """Indices k with elements[k] * w == w * elements[k] (signed permutations)."""
    out = []
    n = len(w_image)
    for k in range(len(images)):
        zi = images[k]
        zs = signs[k]
        ok = True
        for i in range(n):
            # compare (z w)(e_i) with (w z)(e_i)
            j = w_image[i]
            j2 = zi[i]
            if zi[j] != w_image[j2] or w_signs[i] * zs[j] != zs[i] * w_signs[j2]:
                ok = False
                break
        if ok:
            out.append(k)
    return out

"""Pure-Python fallback for the scan kernels; same contracts as _core."""


def dual_scan(gens, n):
    """All packed v in [0, 4**n) orthogonal to every packed generator."""
    if n < 1 or n > 13:
        raise ValueError("scan kernel supports 1 <= n <= 13")
    shifts = [2 * j for j in range(n)]
    gd = [tuple((g >> sh) & 3 for sh in shifts) for g in gens]
    out = []
    for v in range(1 << (2 * n)):
        vd = tuple((v >> sh) & 3 for sh in shifts)
        for g in gd:
            if sum(a * b for a, b in zip(vd, g)) & 3:
                break
        else:
            out.append(v)
    return out


def closure(gens, n):
    """Additive closure (subgroup) of the packed generators inside Z4^n."""
    if n < 1 or n > 13:
        raise ValueError("closure kernel supports 1 <= n <= 13")
    low = sum(1 << (2 * j) for j in range(n))
    gs = list(gens)
    queue = [0]
    seen = {0}
    head = 0
    while head < len(queue):
        a = queue[head]
        head += 1
        for b in gs:
            s = (a ^ b) ^ (((a & b) & low) << 1)
            if s not in seen:
                seen.add(s)
                queue.append(s)
    return queue

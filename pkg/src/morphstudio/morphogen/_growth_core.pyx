# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled growth kernel.

Operation-for-operation mirror of `_growth_py.grow_kernel`; see that module
for the documented step structure. Compiled with -ffp-contract=off so both
kernels produce bit-identical trajectories.
"""

from libc.math cimport atan2, cos, fabs, sin, sqrt

cdef double M_TWO_PI = 6.283185307179586

# Keep in sync with _growth_py.py.
cdef int INITIAL_CELLS = 16
cdef double RING_RADIUS = 0.1
cdef double DT = 0.1
cdef double JITTER_FRACTION = 0.1
cdef double WORLD_BOUND = 10.0
cdef double GRID_HALF = 2.56
cdef double GRID_SPAN = 5.12
cdef double MIN_GRID_CELL = 0.01
cdef int NSIDE_MAX = 512

cdef double INV_2_53 = 1.0 / 9007199254740992.0


cdef inline unsigned long long _next(unsigned long long *state) nogil:
    cdef unsigned long long z
    state[0] = state[0] + <unsigned long long>0x9E3779B97F4A7C15
    z = state[0]
    z = (z ^ (z >> 30)) * <unsigned long long>0xBF58476D1CE4B5B9
    z = (z ^ (z >> 27)) * <unsigned long long>0x94D049BB133111EB
    return z ^ (z >> 31)


def grow_kernel(phys, unsigned long long seed, int budget, int steps,
                double[::1] px, double[::1] py,
                double[::1] vx, double[::1] vy,
                double[::1] food,
                int[::1] nxt, int[::1] prv,
                int[::1] count_trace,
                double[::1] fxs, double[::1] fys,
                int[::1] head, long long[::1] stamp,
                int[::1] bnext, int[::1] cgx, int[::1] cgy):
    cdef double ks = phys[0]
    cdef double rest = phys[1]
    cdef double krep = phys[2]
    cdef double rrep = phys[3]
    cdef double klap = phys[4]
    cdef double knorm = phys[5]
    cdef double fbase = phys[6]
    cdef double fcurv = phys[7]
    cdef double thr = phys[8]
    cdef double damp = phys[9]
    cdef double noise = phys[10]

    cdef unsigned long long state = seed
    cdef int count, k, t, i, a, b, m, n0, gx, gy, oy, ox, yy, xx, j, nside, row
    cdef long long epoch, bidx
    cdef double ang, xi, yi, fx, fy, dx, dy, dist, c, tx, ty, tlen
    cdef double e1x, e1y, e2x, e2y, cross, dot, angle, eta, j1, j2
    cdef double r2, r, h, scale = 0.0
    cdef double rrep2 = rrep * rrep
    cdef double jitter = JITTER_FRACTION * rest
    cdef bint use_rep = krep != 0.0 and rrep > 0.0
    cdef bint blow = False
    cdef int steps_run = 0

    count = INITIAL_CELLS
    for k in range(INITIAL_CELLS):
        ang = M_TWO_PI * k / 16.0
        px[k] = RING_RADIUS * cos(ang)
        py[k] = RING_RADIUS * sin(ang)
        vx[k] = 0.0
        vy[k] = 0.0
        food[k] = 0.0
        nxt[k] = (k + 1) % INITIAL_CELLS
        prv[k] = (k + 15) % INITIAL_CELLS

    nside = 1
    if use_rep:
        h = rrep if rrep > MIN_GRID_CELL else MIN_GRID_CELL
        nside = <int>(GRID_SPAN / h)
        if nside < 1:
            nside = 1
        if nside > NSIDE_MAX:
            nside = NSIDE_MAX
        scale = nside / GRID_SPAN

    with nogil:
        for t in range(steps):
            epoch = t + 1
            if use_rep:
                for i in range(count - 1, -1, -1):
                    gx = <int>((px[i] + GRID_HALF) * scale)
                    if gx < 0:
                        gx = 0
                    elif gx >= nside:
                        gx = nside - 1
                    gy = <int>((py[i] + GRID_HALF) * scale)
                    if gy < 0:
                        gy = 0
                    elif gy >= nside:
                        gy = nside - 1
                    bidx = gy * nside + gx
                    if stamp[bidx] != epoch:
                        head[bidx] = -1
                        stamp[bidx] = epoch
                    bnext[i] = head[bidx]
                    head[bidx] = i
                    cgx[i] = gx
                    cgy[i] = gy

            for i in range(count):
                xi = px[i]
                yi = py[i]
                a = prv[i]
                b = nxt[i]
                fx = 0.0
                fy = 0.0

                dx = px[a] - xi
                dy = py[a] - yi
                dist = sqrt(dx * dx + dy * dy)
                if dist > 0.0:
                    c = ks * (dist - rest) / dist
                    fx += c * dx
                    fy += c * dy
                dx = px[b] - xi
                dy = py[b] - yi
                dist = sqrt(dx * dx + dy * dy)
                if dist > 0.0:
                    c = ks * (dist - rest) / dist
                    fx += c * dx
                    fy += c * dy

                fx += klap * ((px[a] + px[b]) * 0.5 - xi)
                fy += klap * ((py[a] + py[b]) * 0.5 - yi)

                tx = px[b] - px[a]
                ty = py[b] - py[a]
                tlen = sqrt(tx * tx + ty * ty)
                if tlen > 0.0:
                    fx += knorm * (ty / tlen)
                    fy += knorm * (-tx / tlen)

                if use_rep:
                    gx = cgx[i]
                    gy = cgy[i]
                    for oy in range(-1, 2):
                        yy = gy + oy
                        if yy < 0 or yy >= nside:
                            continue
                        row = yy * nside
                        for ox in range(-1, 2):
                            xx = gx + ox
                            if xx < 0 or xx >= nside:
                                continue
                            bidx = row + xx
                            j = head[bidx] if stamp[bidx] == epoch else -1
                            while j != -1:
                                if j != i:
                                    dx = xi - px[j]
                                    dy = yi - py[j]
                                    r2 = dx * dx + dy * dy
                                    if 0.0 < r2 < rrep2:
                                        r = sqrt(r2)
                                        c = krep * (1.0 - r / rrep) / r
                                        fx += c * dx
                                        fy += c * dy
                                j = bnext[j]

                fxs[i] = fx
                fys[i] = fy

            for i in range(count):
                vx[i] = damp * vx[i] + DT * fxs[i]
                vy[i] = damp * vy[i] + DT * fys[i]
                px[i] += DT * vx[i]
                py[i] += DT * vy[i]
                if not (-WORLD_BOUND <= px[i] <= WORLD_BOUND
                        and -WORLD_BOUND <= py[i] <= WORLD_BOUND):
                    blow = True

            steps_run = t + 1
            if blow:
                count_trace[t] = count
                break

            for i in range(count):
                a = prv[i]
                b = nxt[i]
                e1x = px[i] - px[a]
                e1y = py[i] - py[a]
                e2x = px[b] - px[i]
                e2y = py[b] - py[i]
                cross = e1x * e2y - e1y * e2x
                dot = e1x * e2x + e1y * e2y
                angle = atan2(fabs(cross), dot)

                eta = 2.0 * ((_next(&state) >> 11) * INV_2_53) - 1.0
                food[i] += (fbase + fcurv * angle) * (1.0 + noise * eta)

            n0 = count
            for i in range(n0):
                if count < budget and food[i] > thr:
                    b = nxt[i]
                    j1 = 2.0 * ((_next(&state) >> 11) * INV_2_53) - 1.0
                    j2 = 2.0 * ((_next(&state) >> 11) * INV_2_53) - 1.0
                    m = count
                    px[m] = (px[i] + px[b]) * 0.5 + jitter * j1
                    py[m] = (py[i] + py[b]) * 0.5 + jitter * j2
                    vx[m] = (vx[i] + vx[b]) * 0.5
                    vy[m] = (vy[i] + vy[b]) * 0.5
                    food[m] = 0.0
                    food[i] = 0.0
                    nxt[i] = m
                    prv[m] = i
                    nxt[m] = b
                    prv[b] = m
                    count += 1

            count_trace[t] = count
            if count >= budget:
                break

    return count, steps_run, blow

"""Pure-Python growth kernel.

This file is the reference for the compiled kernel in `_growth_core.pyx`:
the two are written operation-for-operation identically (same expressions,
same evaluation order, same libm calls) so their outputs are bit-identical.
Any change here must be mirrored there.

Step structure (one simulation step, documented order):
  1. rebuild the neighbour grid (only when repulsion is active)
  2. force pass: per cell, springs to ring neighbours (prev then next),
     Laplacian pull toward the neighbour midpoint, signed push along the
     outward normal, then repulsion summed over the 3x3 grid neighbourhood
     in (dy, dx) order with ascending cell index inside each bucket
  3. integration: v = damping*v + dt*F; x += dt*v; blow-up check
  4. food pass (ascending cell index): one PRNG draw per cell;
     food += (foodBaseRate + curvatureFoodBias*angle) * (1 + foodNoise*eta)
     where angle is the unsigned turning angle at the cell
  5. split pass (ascending cell index over the pre-step population):
     a cell with food > splitThreshold inserts a new cell between itself and
     its ring successor at the jittered midpoint (two PRNG draws), both foods
     reset to zero; splitting stops when the budget is reached

The run halts early when the budget is reached or a coordinate leaves
[-10, 10] (or goes non-finite), which sets the blow-up flag.
"""

from math import atan2, cos, fabs, sin, sqrt

# Keep in sync with _growth_core.pyx.
INITIAL_CELLS = 16
RING_RADIUS = 0.1
DT = 0.1
JITTER_FRACTION = 0.1
WORLD_BOUND = 10.0
GRID_HALF = 2.56
GRID_SPAN = 5.12
MIN_GRID_CELL = 0.01
NSIDE_MAX = 512
TWO_PI = 6.283185307179586

_MASK64 = (1 << 64) - 1
_INV_2_53 = 1.0 / 9007199254740992.0


def grow_kernel(phys, seed, budget, steps, px, py, vx, vy, food, nxt, prv, count_trace):
    """Run the growth simulation in place.

    `phys` is the 12-tuple of physical parameter values; the remaining
    arguments are caller-allocated lists of length `budget` (`count_trace`
    of length `steps`). Returns (count, steps_run, blow_up).
    """
    ks = phys[0]
    rest = phys[1]
    krep = phys[2]
    rrep = phys[3]
    klap = phys[4]
    knorm = phys[5]
    fbase = phys[6]
    fcurv = phys[7]
    thr = phys[8]
    damp = phys[9]
    noise = phys[10]

    state = seed & _MASK64

    count = INITIAL_CELLS
    for k in range(INITIAL_CELLS):
        ang = TWO_PI * k / 16.0
        px[k] = RING_RADIUS * cos(ang)
        py[k] = RING_RADIUS * sin(ang)
        vx[k] = 0.0
        vy[k] = 0.0
        food[k] = 0.0
        nxt[k] = (k + 1) % INITIAL_CELLS
        prv[k] = (k + 15) % INITIAL_CELLS

    use_rep = krep != 0.0 and rrep > 0.0
    rrep2 = rrep * rrep
    nside = 1
    scale = 0.0
    head = None
    stamp = None
    bnext = None
    cgx = None
    cgy = None
    if use_rep:
        h = rrep if rrep > MIN_GRID_CELL else MIN_GRID_CELL
        nside = int(GRID_SPAN / h)
        if nside < 1:
            nside = 1
        if nside > NSIDE_MAX:
            nside = NSIDE_MAX
        scale = nside / GRID_SPAN
        head = [-1] * (nside * nside)
        stamp = [0] * (nside * nside)
        bnext = [-1] * budget
        cgx = [0] * budget
        cgy = [0] * budget

    fxs = [0.0] * budget
    fys = [0.0] * budget

    jitter = JITTER_FRACTION * rest
    blow = False
    steps_run = 0

    for t in range(steps):
        epoch = t + 1
        if use_rep:
            for i in range(count - 1, -1, -1):
                gx = int((px[i] + GRID_HALF) * scale)
                if gx < 0:
                    gx = 0
                elif gx >= nside:
                    gx = nside - 1
                gy = int((py[i] + GRID_HALF) * scale)
                if gy < 0:
                    gy = 0
                elif gy >= nside:
                    gy = nside - 1
                b = gy * nside + gx
                if stamp[b] != epoch:
                    head[b] = -1
                    stamp[b] = epoch
                bnext[i] = head[b]
                head[b] = i
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
            if not (
                -WORLD_BOUND <= px[i] <= WORLD_BOUND
                and -WORLD_BOUND <= py[i] <= WORLD_BOUND
            ):
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

            state = (state + 0x9E3779B97F4A7C15) & _MASK64
            z = state
            z = ((z ^ (z >> 30)) * 0xBF58476D1CE4B5B9) & _MASK64
            z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
            z = z ^ (z >> 31)
            eta = 2.0 * ((z >> 11) * _INV_2_53) - 1.0

            food[i] += (fbase + fcurv * angle) * (1.0 + noise * eta)

        n0 = count
        for i in range(n0):
            if count < budget and food[i] > thr:
                b = nxt[i]

                state = (state + 0x9E3779B97F4A7C15) & _MASK64
                z = state
                z = ((z ^ (z >> 30)) * 0xBF58476D1CE4B5B9) & _MASK64
                z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
                z = z ^ (z >> 31)
                j1 = 2.0 * ((z >> 11) * _INV_2_53) - 1.0

                state = (state + 0x9E3779B97F4A7C15) & _MASK64
                z = state
                z = ((z ^ (z >> 30)) * 0xBF58476D1CE4B5B9) & _MASK64
                z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
                z = z ^ (z >> 31)
                j2 = 2.0 * ((z >> 11) * _INV_2_53) - 1.0

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

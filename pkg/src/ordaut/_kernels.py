"""Integer kernels over dense transition arrays.

A transition array ``succ`` has shape ``(n, k)`` and dtype int64; entry
``succ[q, a]`` is the successor of state ``q`` on the letter of rank ``a``
or ``-1`` when undefined.  Everything here avoids Python objects so that it
compiles under numba; see :mod:`ordaut._accel` for the switch.
"""
from __future__ import annotations

import numpy as np

from ._accel import kernel


@kernel
def tarjan_scc(succ):
    """Strongly connected components, iteratively.

    Returns ``(comp, ncomp)``.  Component ids follow Tarjan's completion
    order, so every edge between distinct components goes from a larger id
    to a smaller one.
    """
    n = succ.shape[0]
    k = succ.shape[1]
    index = np.full(n, -1, np.int64)
    low = np.zeros(n, np.int64)
    onstack = np.zeros(n, np.bool_)
    stack = np.empty(n, np.int64)
    comp = np.full(n, -1, np.int64)
    call_v = np.empty(n, np.int64)
    call_e = np.empty(n, np.int64)
    sp = 0
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = counter
        low[root] = counter
        counter += 1
        stack[sp] = root
        sp += 1
        onstack[root] = True
        call_v[0] = root
        call_e[0] = 0
        cp = 1
        while cp > 0:
            v = call_v[cp - 1]
            e = call_e[cp - 1]
            if e < k:
                call_e[cp - 1] = e + 1
                w = succ[v, e]
                if w < 0:
                    continue
                if index[w] == -1:
                    index[w] = counter
                    low[w] = counter
                    counter += 1
                    stack[sp] = w
                    sp += 1
                    onstack[w] = True
                    call_v[cp] = w
                    call_e[cp] = 0
                    cp += 1
                elif onstack[w] and index[w] < low[v]:
                    low[v] = index[w]
            else:
                cp -= 1
                if low[v] == index[v]:
                    while True:
                        sp -= 1
                        w = stack[sp]
                        onstack[w] = False
                        comp[w] = ncomp
                        if w == v:
                            break
                    ncomp += 1
                if cp > 0:
                    u = call_v[cp - 1]
                    if low[v] < low[u]:
                        low[u] = low[v]
    return comp, ncomp


@kernel
def nontrivial_components(succ, comp, ncomp):
    """Flag components that contain a cycle (size > 1 or a self-loop)."""
    n = succ.shape[0]
    size = np.zeros(ncomp, np.int64)
    flag = np.zeros(ncomp, np.bool_)
    for q in range(n):
        size[comp[q]] += 1
        for a in range(succ.shape[1]):
            if succ[q, a] == q:
                flag[comp[q]] = True
    for c in range(ncomp):
        if size[c] > 1:
            flag[c] = True
    return flag


@kernel
def component_heights(succ, comp, ncomp, nontrivial):
    """Longest chain of nontrivial components starting at each component.

    ``comp`` must be in Tarjan order (edges point to smaller ids).  Trivial
    components get height 0.
    """
    n = succ.shape[0]
    # counting sort of states by component
    start = np.zeros(ncomp + 1, np.int64)
    for q in range(n):
        start[comp[q] + 1] += 1
    for c in range(ncomp):
        start[c + 1] += start[c]
    fill = start[:ncomp].copy()
    byc = np.empty(n, np.int64)
    for q in range(n):
        byc[fill[comp[q]]] = q
        fill[comp[q]] += 1

    height = np.zeros(ncomp, np.int64)
    top = np.zeros(ncomp, np.int64)
    for c in range(ncomp):
        below = 0
        for i in range(start[c], start[c + 1]):
            q = byc[i]
            for a in range(succ.shape[1]):
                w = succ[q, a]
                if w >= 0 and comp[w] != c and top[comp[w]] > below:
                    below = top[comp[w]]
        if nontrivial[c]:
            height[c] = below + 1
            top[c] = below + 1
        else:
            top[c] = below
    return height


# ---------------------------------------------------------------------------
# Exhaustive enumeration of small complete prefix automata.
#
# Candidates are generated directly in canonical breadth-first numbering:
# states are processed in order 0, 1, ...; a transition either targets an
# already numbered state or the next fresh number.  Every accessible
# automaton has exactly one such numbering, so each isomorphism class is
# produced once.


@kernel
def _reaches(ch, a, b, seen, stk):
    if a == b:
        return True
    seen[:] = False
    top = 0
    stk[top] = a
    top += 1
    seen[a] = True
    while top > 0:
        top -= 1
        v = stk[top]
        for x in range(2):
            w = ch[v, x]
            if w < 0 or seen[w]:
                continue
            if w == b:
                return True
            seen[w] = True
            stk[top] = w
            top += 1
    return False


@kernel
def _advance(s, acyclic, nf, ch, fin, choice, nxt_at, nfin_at, pos, seen, stk):
    """Step the backtracking search to the next complete candidate.

    ``nf`` < 0 means any positive number of final states.  Returns False
    once the space is exhausted.
    """
    i = pos[0]
    last = s * s
    while i >= 0:
        c = choice[i] + 1
        choice[i] = c
        ch[i, 0] = -1
        ch[i, 1] = -1
        fin[i] = False
        if c > last:
            choice[i] = -1
            i -= 1
            continue
        nxt = nxt_at[i]
        nfin = nfin_at[i]
        if c == 0:
            if nf >= 0 and nfin + 1 > nf:
                continue
            fin[i] = True
            new_nxt = nxt
            new_nfin = nfin + 1
        else:
            t0 = (c - 1) // s
            t1 = (c - 1) % s
            if t0 > nxt:
                continue
            n1 = nxt + 1 if t0 == nxt else nxt
            if t1 > n1 or t1 >= s:
                continue
            n2 = n1 + 1 if t1 == n1 else n1
            if acyclic:
                if t0 <= i and _reaches(ch, t0, i, seen, stk):
                    continue
                if t1 <= i and _reaches(ch, t1, i, seen, stk):
                    continue
            ch[i, 0] = t0
            ch[i, 1] = t1
            new_nxt = n2
            new_nfin = nfin
        if nf >= 0 and new_nfin + (s - i - 1) < nf:
            continue
        if i + 1 == s:
            if new_nxt != s or new_nfin == 0:
                continue
            if nf >= 0 and new_nfin != nf:
                continue
            pos[0] = i
            return True
        if new_nxt == i + 1:
            continue
        nxt_at[i + 1] = new_nxt
        nfin_at[i + 1] = new_nfin
        i += 1
        choice[i] = -1
    pos[0] = -1
    return False


@kernel
def _coreachable(ch, fin):
    s = ch.shape[0]
    ok = fin.copy()
    changed = True
    while changed:
        changed = False
        for q in range(s):
            if not ok[q] and ((ch[q, 0] >= 0 and ok[ch[q, 0]]) or (ch[q, 1] >= 0 and ok[ch[q, 1]])):
                ok[q] = True
                changed = True
    for q in range(s):
        if not ok[q]:
            return False
    return True


@kernel
def _is_ordinal(ch):
    comp, ncomp = tarjan_scc(ch)
    nontriv = nontrivial_components(ch, comp, ncomp)
    for q in range(ch.shape[0]):
        w = ch[q, 0]
        if w >= 0 and nontriv[comp[q]] and comp[w] == comp[q]:
            return False
    return True


@kernel
def enumerate_cpas(s, acyclic, nf, ordinal_only, out_ch, out_fin):
    """Enumerate canonical trim CPAs with exactly ``s`` states.

    Fills ``out_ch`` / ``out_fin`` (shape ``(cap, s, 2)`` / ``(cap, s)``) up
    to their capacity and returns the total number of matches, which may
    exceed the capacity.
    """
    cap = out_ch.shape[0]
    ch = np.full((s, 2), -1, np.int64)
    fin = np.zeros(s, np.bool_)
    choice = np.full(s, -1, np.int64)
    nxt_at = np.zeros(s + 1, np.int64)
    nfin_at = np.zeros(s + 1, np.int64)
    nxt_at[0] = 1
    pos = np.zeros(1, np.int64)
    seen = np.zeros(s, np.bool_)
    stk = np.empty(s, np.int64)
    total = 0
    while _advance(s, acyclic, nf, ch, fin, choice, nxt_at, nfin_at, pos, seen, stk):
        if not acyclic and not _coreachable(ch, fin):
            continue
        if ordinal_only and not _is_ordinal(ch):
            continue
        if total < cap:
            out_ch[total] = ch
            out_fin[total] = fin
        total += 1
    return total


@kernel
def search_ordered_finals(s, counts, perms, out_ch, out_fin, out_perm):
    """First canonical acyclic CPA of size ``s`` meeting the block counts.

    ``counts[i]`` is the required number of words that reach the final
    state labelled ``i`` and are followed (lexicographically) only by words
    reaching finals with label >= i.  Each row of ``perms`` assigns labels
    to the final states taken in numbering order.  On success fills the
    outputs and returns True.
    """
    nf = counts.shape[0]
    need = 0
    for i in range(nf):
        need += counts[i]
    ch = np.full((s, 2), -1, np.int64)
    fin = np.zeros(s, np.bool_)
    choice = np.full(s, -1, np.int64)
    nxt_at = np.zeros(s + 1, np.int64)
    nfin_at = np.zeros(s + 1, np.int64)
    nxt_at[0] = 1
    pos = np.zeros(1, np.int64)
    seen = np.zeros(s, np.bool_)
    stk = np.empty(s, np.int64)
    seq = np.empty(1 << (s - 1), np.int64)
    dstk = np.empty(s + 1, np.int64)
    fidx = np.full(s, -1, np.int64)
    got = np.zeros(nf, np.int64)
    while _advance(s, True, nf, ch, fin, choice, nxt_at, nfin_at, pos, seen, stk):
        # finals hit by the accepted words, in lexicographic order
        nseq = 0
        top = 0
        dstk[top] = 0
        top += 1
        while top > 0:
            top -= 1
            v = dstk[top]
            if fin[v]:
                seq[nseq] = v
                nseq += 1
            else:
                dstk[top] = ch[v, 1]
                top += 1
                dstk[top] = ch[v, 0]
                top += 1
        if nseq < need:
            continue
        j = 0
        for q in range(s):
            if fin[q]:
                fidx[q] = j
                j += 1
        for p in range(perms.shape[0]):
            got[:] = 0
            lowest = nf
            for t in range(nseq - 1, -1, -1):
                lab = perms[p, fidx[seq[t]]]
                if lab <= lowest:
                    got[lab] += 1
                    lowest = lab
            ok = True
            for i in range(nf):
                if got[i] != counts[i]:
                    ok = False
                    break
            if ok:
                out_ch[:, :] = ch
                out_fin[:] = fin
                out_perm[:] = perms[p]
                return True
    return False

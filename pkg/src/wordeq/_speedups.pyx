# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; see _fallback.py for the reference semantics.

Both kernels are exhaustive scans over small dense spaces: word tuples with
fixed per-variable lengths, and all pairs of image pairs for the
conjunction-pairing identity.  The Python-level data model (compiled
matrices, letter coding) is documented in the fallback module.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memcmp
from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_GET_SIZE


cdef struct Atom:
    int neg
    int lhs_off
    int lhs_len
    int rhs_off
    int rhs_len
    int lhs_image
    int rhs_image


cdef struct Disjunct:
    int atom_off
    int n_atoms


cdef class _Matrix:
    cdef Atom* atoms
    cdef Disjunct* disjuncts
    cdef int* symbols
    cdef int n_disjuncts
    cdef int max_image

    def __dealloc__(self):
        if self.atoms != NULL:
            free(self.atoms)
        if self.disjuncts != NULL:
            free(self.disjuncts)
        if self.symbols != NULL:
            free(self.symbols)


cdef _Matrix _compile(object matrix, int* lengths):
    """Flatten the list-of-lists matrix into C arrays, precomputing image lengths."""
    cdef _Matrix m = _Matrix()
    cdef int n_atoms = 0, n_syms = 0
    for disjunct in matrix:
        n_atoms += len(disjunct)
        for neg, lhs, rhs in disjunct:
            n_syms += len(lhs) + len(rhs)
    m.n_disjuncts = len(matrix)
    m.disjuncts = <Disjunct*>malloc(sizeof(Disjunct) * max(1, m.n_disjuncts))
    m.atoms = <Atom*>malloc(sizeof(Atom) * max(1, n_atoms))
    m.symbols = <int*>malloc(sizeof(int) * max(1, n_syms))
    m.max_image = 1
    cdef int ai = 0, si = 0, di = 0
    cdef int s, image
    for disjunct in matrix:
        m.disjuncts[di].atom_off = ai
        m.disjuncts[di].n_atoms = len(disjunct)
        di += 1
        for neg, lhs, rhs in disjunct:
            m.atoms[ai].neg = 1 if neg else 0
            m.atoms[ai].lhs_off = si
            m.atoms[ai].lhs_len = len(lhs)
            image = 0
            for s in lhs:
                m.symbols[si] = s
                si += 1
                image += lengths[s] if s >= 0 else 1
            m.atoms[ai].lhs_image = image
            if image > m.max_image:
                m.max_image = image
            m.atoms[ai].rhs_off = si
            m.atoms[ai].rhs_len = len(rhs)
            image = 0
            for s in rhs:
                m.symbols[si] = s
                si += 1
                image += lengths[s] if s >= 0 else 1
            m.atoms[ai].rhs_image = image
            if image > m.max_image:
                m.max_image = image
            ai += 1
    return m


cdef inline void _render(int* syms, int off, int n, char* out,
                         char* digits, int* var_off, int* lengths,
                         const char* letters) noexcept nogil:
    cdef int i, s, pos = 0, l
    for i in range(n):
        s = syms[off + i]
        if s >= 0:
            l = lengths[s]
            memcpy(out + pos, digits + var_off[s], l)
            pos += l
        else:
            out[pos] = letters[-s - 1]
            pos += 1


cdef bint _satisfies(_Matrix m, char* digits, int* var_off, int* lengths,
                     const char* letters, char* buf_l, char* buf_r) noexcept nogil:
    cdef int d, a
    cdef Atom* at
    cdef bint ok, same
    for d in range(m.n_disjuncts):
        ok = True
        for a in range(m.disjuncts[d].atom_off,
                       m.disjuncts[d].atom_off + m.disjuncts[d].n_atoms):
            at = &m.atoms[a]
            if at.lhs_image != at.rhs_image:
                same = False
            else:
                _render(m.symbols, at.lhs_off, at.lhs_len, buf_l,
                        digits, var_off, lengths, letters)
                _render(m.symbols, at.rhs_off, at.rhs_len, buf_r,
                        digits, var_off, lengths, letters)
                same = memcmp(buf_l, buf_r, at.lhs_image) == 0
            if same == (at.neg != 0):
                ok = False
                break
        if ok:
            return True
    return False


def scan_fixed_lengths(letters, lengths, matrix, want_satisfying):
    """See _fallback.scan_fixed_lengths; identical contract and order."""
    cdef bytes letters_b = letters.encode("ascii")
    cdef const char* lett = letters_b
    cdef int m_sz = len(letters_b)
    cdef int k = len(lengths)
    cdef int* lens = <int*>malloc(sizeof(int) * max(1, k))
    cdef int* var_off = <int*>malloc(sizeof(int) * max(1, k))
    cdef int total = 0, i
    cdef _Matrix mat
    cdef char* digits
    cdef char* buf_l
    cdef char* buf_r
    cdef bint want = bool(want_satisfying)
    cdef bint found = False
    cdef int pos
    for i in range(k):
        lens[i] = lengths[i]
        var_off[i] = total
        total += lengths[i]
    if m_sz == 0 and total > 0:
        free(lens)
        free(var_off)
        return None
    mat = _compile(matrix, lens)
    digits = <char*>malloc(max(1, total))
    buf_l = <char*>malloc(mat.max_image + 1)
    buf_r = <char*>malloc(mat.max_image + 1)
    try:
        for i in range(total):
            digits[i] = lett[0]
        while True:
            if _satisfies(mat, digits, var_off, lens, lett, buf_l, buf_r) == want:
                found = True
                break
            # odometer step, rightmost digit fastest
            pos = total - 1
            while pos >= 0 and digits[pos] == lett[m_sz - 1]:
                digits[pos] = lett[0]
                pos -= 1
            if pos < 0:
                break
            i = 0
            while lett[i] != digits[pos]:
                i += 1
            digits[pos] = lett[i + 1]
        if not found:
            return None
        out = []
        for i in range(k):
            out.append(digits[var_off[i]:var_off[i] + lens[i]].decode("ascii"))
        return tuple(out)
    finally:
        free(lens)
        free(var_off)
        free(digits)
        free(buf_l)
        free(buf_r)


def lemma2_violations(su, sv, a, b):
    """See _fallback.lemma2_violations; identical contract."""
    cdef int n = len(su)
    cdef const char** pu = <const char**>malloc(sizeof(char*) * max(1, n))
    cdef const char** pv = <const char**>malloc(sizeof(char*) * max(1, n))
    cdef int* lu = <int*>malloc(sizeof(int) * max(1, n))
    cdef int* lv = <int*>malloc(sizeof(int) * max(1, n))
    cdef char* eq = <char*>malloc(max(1, n))
    cdef char* bl = NULL
    cdef char* br = NULL
    cdef int i, j, t
    cdef bytes bi
    cdef char ca = (<const char*>PyBytes_AS_STRING(a))[0]
    cdef char cb = (<const char*>PyBytes_AS_STRING(b))[0]
    cdef long violations = 0
    cdef int maxlen = 0
    cdef int pos_l, pos_r, L
    cdef int[::1] idx
    import array as _array
    try:
        for i in range(n):
            bi = su[i]
            pu[i] = PyBytes_AS_STRING(bi)
            lu[i] = PyBytes_GET_SIZE(bi)
            bi = sv[i]
            pv[i] = PyBytes_AS_STRING(bi)
            lv[i] = PyBytes_GET_SIZE(bi)
            eq[i] = 1 if (lu[i] == lv[i] and memcmp(pu[i], pv[i], lu[i]) == 0) else 0
            if lu[i] > maxlen:
                maxlen = lu[i]
            if lv[i] > maxlen:
                maxlen = lv[i]
        bl = <char*>malloc(4 * maxlen + 3)
        br = <char*>malloc(4 * maxlen + 3)
        # bucket indices by length delta; only delta_i + delta_j == 0 can compare equal
        buckets = {}
        for j in range(n):
            buckets.setdefault(lu[j] - lv[j], []).append(j)
        bucket_arrays = {d: _array.array("i", lst) for d, lst in buckets.items()}
        for i in range(n):
            arr = bucket_arrays.get(-(lu[i] - lv[i]))
            if arr is None:
                continue
            idx = arr
            for t in range(idx.shape[0]):
                j = idx[t]
                if eq[i] and eq[j]:
                    continue
                L = 2 * lu[i] + 2 * lu[j] + 2
                pos_l = 0
                memcpy(bl + pos_l, pu[i], lu[i]); pos_l += lu[i]
                bl[pos_l] = ca; pos_l += 1
                memcpy(bl + pos_l, pu[j], lu[j]); pos_l += lu[j]
                memcpy(bl + pos_l, pu[i], lu[i]); pos_l += lu[i]
                bl[pos_l] = cb; pos_l += 1
                memcpy(bl + pos_l, pu[j], lu[j]); pos_l += lu[j]
                pos_r = 0
                memcpy(br + pos_r, pv[i], lv[i]); pos_r += lv[i]
                br[pos_r] = ca; pos_r += 1
                memcpy(br + pos_r, pv[j], lv[j]); pos_r += lv[j]
                memcpy(br + pos_r, pv[i], lv[i]); pos_r += lv[i]
                br[pos_r] = cb; pos_r += 1
                memcpy(br + pos_r, pv[j], lv[j]); pos_r += lv[j]
                if pos_l == pos_r and memcmp(bl, br, L) == 0:
                    violations += 1
        return violations
    finally:
        free(pu)
        free(pv)
        free(lu)
        free(lv)
        free(eq)
        if bl != NULL:
            free(bl)
        if br != NULL:
            free(br)

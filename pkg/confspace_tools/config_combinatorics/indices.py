from fractions import Fraction
from itertools import product


class IndexTupleError(Exception):
    """ Custom exception for malformed index tuples and rank positions
    """
    pass


def check_index_tuple(i):
    """ Entries i_2, ..., i_k must be odd with 1 <= i_m <= 2m - 1
    """
    i = tuple(i)
    for pos, entry in enumerate(i):
        m = pos + 2
        if not isinstance(entry, int) or entry % 2 == 0 or not 1 <= entry <= 2 * m - 1:
            raise IndexTupleError("Entry i_%i = %s of %s is not an odd integer in [1, %i]" % (m, entry, i, 2 * m - 1))
    return i


def enumerate_index_tuples(k):
    """ All tuples (i_2, ..., i_k) in lexicographic order, k! of them.

    For k = 1 this is the single empty tuple.
    """
    if k < 1:
        raise IndexTupleError("Number of particles must be positive, got %i" % k)
    return list(product(*[range(1, 2 * m, 2) for m in range(2, k + 1)]))


def _order(heights):
    return sorted(range(1, len(heights) + 1), key=lambda p: heights[p - 1])


def heights(i):
    """ Representative heights t_1, ..., t_k on the line.

    t_1 = 0; particle m + 1 with i_{m+1} = 2 alpha + 1 goes below everything
    at -m (alpha = 0), above everything at +m (alpha = m), and otherwise at the
    midpoint between the alpha-th and (alpha + 1)-th lowest particle.
    """
    i = check_index_tuple(i)
    t = [Fraction(0)]
    for pos, entry in enumerate(i):
        m = pos + 1
        alpha = (entry - 1) // 2
        if alpha == 0:
            t.append(Fraction(-m))
        elif alpha == m:
            t.append(Fraction(m))
        else:
            order = _order(t)
            t.append((t[order[alpha - 1] - 1] + t[order[alpha] - 1]) / 2)
    return tuple(t)


def ranks(i):
    """ j_p = the particle with the p-th smallest height
    """
    return tuple(_order(heights(i)))


def wall_relabel(p, alpha):
    """ Bijection on {1, ..., alpha + 1} swapping the rank positions p and p + 1
    """
    if not 1 <= p <= alpha:
        raise IndexTupleError("Rank position %i is out of range [1, %i]" % (p, alpha))
    perm = {q: q for q in range(1, alpha + 2)}
    perm[p], perm[p + 1] = p + 1, p
    return perm


def insert_position(i):
    """ Rank position of the last particle of a tuple, i_k = 2 alpha + 1 -> alpha + 1
    """
    i = check_index_tuple(i)
    return (i[-1] - 1) // 2 + 1 if i else 1


def format_fraction(x):
    return str(x.numerator) if x.denominator == 1 else '%i/%i' % (x.numerator, x.denominator)

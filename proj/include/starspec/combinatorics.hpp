#pragma once

#include <cstdint>
#include <vector>

namespace starspec {

/// Rank of a tuple in the lexicographic enumeration of all repetition-free
/// d-tuples over {1..n}.
using TupleRank = std::uint64_t;

/// A permutation of {1..n}, stored as its image sequence:
/// images[i] = pi(i+1). All values are 1-based.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// The transposition (a b) in S_n.
    static Permutation transposition(int n, int a, int b);

    int n() const { return static_cast<int>(images_.size()); }
    /// pi(v) for v in {1..n}.
    int operator()(int v) const { return images_[static_cast<std::size_t>(v) - 1]; }
    const std::vector<int>& images() const { return images_; }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// (a o b)(v) = a(b(v)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
/// +1 for even permutations, -1 for odd.
int parity(const Permutation& p);

/// The permutation pi with pi(c_j) = j, for c a full n-tuple of distinct
/// values in {1..n}.
Permutation permutation_from_tuple(const std::vector<int>& c);

/// A repetition-free d-tuple over {1..n}; 1 <= d <= n.
class DTuple {
public:
    DTuple(std::vector<int> entries, int n);

    int d() const { return static_cast<int>(entries_.size()); }
    int n() const { return n_; }
    const std::vector<int>& entries() const { return entries_; }
    bool contains(int v) const;

    bool operator==(const DTuple&) const = default;

private:
    std::vector<int> entries_;
    int n_;
};

/// Applies the star transposition (1 i) entrywise: entries equal to 1 become
/// i, entries equal to i become 1, others are untouched. Requires 2 <= i <= n.
DTuple star_apply(int i, const DTuple& x);

/// n! / (n-d)!: the number of repetition-free d-tuples over {1..n}.
std::uint64_t tuple_count(int d, int n);

std::uint64_t binomial(int n, int k);

/// Lexicographic rank; inverse of unrank_tuple.
TupleRank rank_tuple(const DTuple& x);
DTuple unrank_tuple(TupleRank r, int d, int n);

/// All repetition-free d-tuples over {1..n} in rank (lexicographic) order.
std::vector<DTuple> all_tuples(int d, int n);

/// Rank of a permutation = rank of its image sequence as an n-tuple.
TupleRank rank_permutation(const Permutation& p);
Permutation unrank_permutation(TupleRank r, int n);

} // namespace starspec

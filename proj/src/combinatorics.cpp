#include "starspec/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace starspec {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    if (n < 1)
        throw std::invalid_argument("permutation must act on at least one point");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : images_) {
        if (v < 1 || v > n)
            throw std::invalid_argument("permutation image out of range: " + std::to_string(v));
        if (seen[static_cast<std::size_t>(v) - 1]++)
            throw std::invalid_argument("permutation image repeats value " + std::to_string(v));
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a == b)
        throw std::invalid_argument("transposition needs two distinct points");
    auto p = identity(n);
    if (a < 1 || a > n || b < 1 || b > n)
        throw std::invalid_argument("transposition point out of range");
    std::swap(p.images_[static_cast<std::size_t>(a) - 1],
              p.images_[static_cast<std::size_t>(b) - 1]);
    return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> img(static_cast<std::size_t>(a.n()));
    for (int v = 1; v <= a.n(); ++v)
        img[static_cast<std::size_t>(v) - 1] = a(b(v));
    return Permutation(std::move(img));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> img(static_cast<std::size_t>(p.n()));
    for (int v = 1; v <= p.n(); ++v)
        img[static_cast<std::size_t>(p(v)) - 1] = v;
    return Permutation(std::move(img));
}

int parity(const Permutation& p) {
    // sign = (-1)^(n - number of cycles)
    const int n = p.n();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int cycles = 0;
    for (int v = 1; v <= n; ++v) {
        if (seen[static_cast<std::size_t>(v) - 1]) continue;
        ++cycles;
        int w = v;
        while (!seen[static_cast<std::size_t>(w) - 1]) {
            seen[static_cast<std::size_t>(w) - 1] = 1;
            w = p(w);
        }
    }
    return ((n - cycles) % 2 == 0) ? 1 : -1;
}

Permutation permutation_from_tuple(const std::vector<int>& c) {
    const int n = static_cast<int>(c.size());
    if (n < 1) throw std::invalid_argument("empty tuple");
    std::vector<int> img(static_cast<std::size_t>(n), 0);
    for (int j = 1; j <= n; ++j) {
        const int cj = c[static_cast<std::size_t>(j) - 1];
        if (cj < 1 || cj > n)
            throw std::invalid_argument("tuple value out of range");
        if (img[static_cast<std::size_t>(cj) - 1] != 0)
            throw std::invalid_argument("tuple repeats value " + std::to_string(cj));
        img[static_cast<std::size_t>(cj) - 1] = j;
    }
    return Permutation(std::move(img));
}

DTuple::DTuple(std::vector<int> entries, int n) : entries_(std::move(entries)), n_(n) {
    const int d = static_cast<int>(entries_.size());
    if (n_ < 1 || d < 1 || d > n_)
        throw std::invalid_argument("DTuple requires 1 <= d <= n");
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (int v : entries_) {
        if (v < 1 || v > n_)
            throw std::invalid_argument("tuple entry out of range: " + std::to_string(v));
        if (seen[static_cast<std::size_t>(v) - 1]++)
            throw std::invalid_argument("tuple repeats entry " + std::to_string(v));
    }
}

bool DTuple::contains(int v) const {
    return std::find(entries_.begin(), entries_.end(), v) != entries_.end();
}

DTuple star_apply(int i, const DTuple& x) {
    if (i < 2 || i > x.n())
        throw std::invalid_argument("star transposition (1 i) requires 2 <= i <= n");
    std::vector<int> e = x.entries();
    for (int& v : e) {
        if (v == 1) v = i;
        else if (v == i) v = 1;
    }
    return DTuple(std::move(e), x.n());
}

std::uint64_t tuple_count(int d, int n) {
    if (n < 1 || d < 0 || d > n)
        throw std::invalid_argument("tuple_count requires 0 <= d <= n");
    std::uint64_t c = 1;
    for (int i = 0; i < d; ++i) c *= static_cast<std::uint64_t>(n - i);
    return c;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return c;
}

TupleRank rank_tuple(const DTuple& x) {
    const int d = x.d();
    const int n = x.n();
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    TupleRank r = 0;
    for (int i = 0; i < d; ++i) {
        const int v = x.entries()[static_cast<std::size_t>(i)];
        int smaller = 0;
        for (int w = 1; w < v; ++w)
            if (!used[static_cast<std::size_t>(w) - 1]) ++smaller;
        r += static_cast<TupleRank>(smaller) * tuple_count(d - i - 1, n - i - 1);
        used[static_cast<std::size_t>(v) - 1] = 1;
    }
    return r;
}

DTuple unrank_tuple(TupleRank r, int d, int n) {
    if (d < 1 || d > n)
        throw std::invalid_argument("unrank_tuple requires 1 <= d <= n");
    if (r >= tuple_count(d, n))
        throw std::invalid_argument("tuple rank out of range");
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<int> e(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        const std::uint64_t block = tuple_count(d - i - 1, n - i - 1);
        int idx = static_cast<int>(r / block);
        r %= block;
        for (int w = 1; w <= n; ++w) {
            if (used[static_cast<std::size_t>(w) - 1]) continue;
            if (idx == 0) {
                e[static_cast<std::size_t>(i)] = w;
                used[static_cast<std::size_t>(w) - 1] = 1;
                break;
            }
            --idx;
        }
    }
    return DTuple(std::move(e), n);
}

std::vector<DTuple> all_tuples(int d, int n) {
    const std::uint64_t count = tuple_count(d, n);
    std::vector<DTuple> out;
    out.reserve(count);
    for (std::uint64_t r = 0; r < count; ++r)
        out.push_back(unrank_tuple(r, d, n));
    return out;
}

TupleRank rank_permutation(const Permutation& p) {
    return rank_tuple(DTuple(p.images(), p.n()));
}

Permutation unrank_permutation(TupleRank r, int n) {
    return Permutation(unrank_tuple(r, n, n).entries());
}

} // namespace starspec

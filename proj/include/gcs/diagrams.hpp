#pragma once

// Filled Young diagrams with labels in Z/k, partitions and multipartitions.
//
// A (k,+)-row of length p starting at label a carries the labels
// a, a-1, ..., a-p+1; a (k,-)-row carries a, a+1, ..., a+p-1. Labels live
// in [1, k] with 0 identified with k. Diagrams are multisets of rows and are
// always stored in canonical order (length descending, start ascending).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gcs/errors.hpp"

namespace gcs {

enum class Sign { Plus, Minus };

inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// Reduces an arbitrary integer into the label range [1, k].
inline int wrap_label(long long x, int k) {
    long long r = (x - 1) % k;
    if (r < 0) r += k;
    return static_cast<int>(r) + 1;
}

struct FilledRow {
    int length = 1;
    int start = 1;

    friend bool operator==(const FilledRow&, const FilledRow&) = default;
};

/// Canonical row order: longer rows first, then smaller start label.
inline bool row_precedes(const FilledRow& a, const FilledRow& b) {
    if (a.length != b.length) return a.length > b.length;
    return a.start < b.start;
}

/// Labels of the boxes of a row, read from its beginning box.
inline std::vector<int> row_labels(const FilledRow& row, int k, Sign sign) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(row.length));
    const int step = sign == Sign::Plus ? -1 : 1;
    for (int s = 0; s < row.length; ++s)
        out.push_back(wrap_label(static_cast<long long>(row.start) + step * s, k));
    return out;
}

class DimensionVector {
public:
    DimensionVector() = default;
    explicit DimensionVector(std::vector<int> entries) : entries_(std::move(entries)) {}

    static DimensionVector zeros(int k) { return DimensionVector(std::vector<int>(static_cast<std::size_t>(k), 0)); }
    static DimensionVector uniform(int k, int value) {
        return DimensionVector(std::vector<int>(static_cast<std::size_t>(k), value));
    }

    int size() const { return static_cast<int>(entries_.size()); }
    int total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }
    int operator[](std::size_t i) const { return entries_[i]; }
    int& operator[](std::size_t i) { return entries_[i]; }
    /// 1-based access by label.
    int at_label(int label) const { return entries_.at(static_cast<std::size_t>(label - 1)); }
    const std::vector<int>& entries() const { return entries_; }

    bool nonnegative() const {
        return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v >= 0; });
    }
    int min_entry() const { return entries_.empty() ? 0 : *std::min_element(entries_.begin(), entries_.end()); }

    /// d - c*1_k.
    DimensionVector minus_uniform(int c) const {
        DimensionVector out = *this;
        for (auto& v : out.entries_) v -= c;
        return out;
    }

    friend bool operator==(const DimensionVector&, const DimensionVector&) = default;
    friend auto operator<=>(const DimensionVector&, const DimensionVector&) = default;

private:
    std::vector<int> entries_;
};

/// Weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        std::sort(parts.begin(), parts.end(), std::greater<>());
    }

    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    bool empty() const { return parts.empty(); }
    int length() const { return static_cast<int>(parts.size()); }

    /// (part, multiplicity) pairs, parts descending.
    std::vector<std::pair<int, int>> multiplicities() const {
        std::vector<std::pair<int, int>> out;
        for (int p : parts) {
            if (!out.empty() && out.back().first == p)
                ++out.back().second;
            else
                out.emplace_back(p, 1);
        }
        return out;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

struct MultiPartition {
    std::vector<Partition> components;

    int size() const {
        int s = 0;
        for (const auto& c : components) s += c.size();
        return s;
    }
    int arity() const { return static_cast<int>(components.size()); }

    friend bool operator==(const MultiPartition&, const MultiPartition&) = default;
    friend auto operator<=>(const MultiPartition&, const MultiPartition&) = default;
};

class FilledDiagram;
FilledDiagram canonicalize(std::vector<FilledRow> rows, int k, Sign sign);

class FilledDiagram {
public:
    FilledDiagram() = default;

    int modulus() const { return modulus_; }
    Sign sign() const { return sign_; }
    const std::vector<FilledRow>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    int row_count() const { return static_cast<int>(rows_.size()); }

    /// |lambda|, the number of boxes.
    int size() const {
        int s = 0;
        for (const auto& r : rows_) s += r.length;
        return s;
    }

    /// Underlying partition.
    Partition shape() const {
        Partition p;
        p.parts.reserve(rows_.size());
        for (const auto& r : rows_) p.parts.push_back(r.length);
        return p;
    }

    /// Distinct row lengths, descending. Its size is s.
    std::vector<int> distinct_lengths() const {
        std::vector<int> out;
        for (const auto& r : rows_)
            if (out.empty() || out.back() != r.length) out.push_back(r.length);
        return out;
    }

    /// p^start for rows of the given length.
    int multiplicity(int length, int start) const {
        return static_cast<int>(std::count(rows_.begin(), rows_.end(), FilledRow{length, start}));
    }

    /// p^1 .. p^k for rows of the given length (index = start - 1).
    std::vector<int> multiplicities(int length) const {
        std::vector<int> out(static_cast<std::size_t>(modulus_), 0);
        for (const auto& r : rows_)
            if (r.length == length) ++out[static_cast<std::size_t>(r.start - 1)];
        return out;
    }

    /// gcd of the parts; 0 for the empty diagram.
    int part_gcd() const {
        int g = 0;
        for (const auto& r : rows_) g = std::gcd(g, r.length);
        return g;
    }

    std::vector<int> starts() const {
        std::vector<int> out;
        out.reserve(rows_.size());
        for (const auto& r : rows_) out.push_back(r.start);
        return out;
    }

    friend bool operator==(const FilledDiagram&, const FilledDiagram&) = default;

    // Partition descending lexicographically, then start sequence ascending.
    friend std::strong_ordering operator<=>(const FilledDiagram& a, const FilledDiagram& b) {
        const auto la = a.shape().parts;
        const auto lb = b.shape().parts;
        if (auto c = lb <=> la; c != 0) return c;
        if (auto c = a.starts() <=> b.starts(); c != 0) return c;
        if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
        return a.sign_ <=> b.sign_;
    }

private:
    friend FilledDiagram canonicalize(std::vector<FilledRow> rows, int k, Sign sign);

    int modulus_ = 1;
    Sign sign_ = Sign::Plus;
    std::vector<FilledRow> rows_;
};

inline FilledDiagram canonicalize(std::vector<FilledRow> rows, int k, Sign sign) {
    if (k < 1) throw InvalidRow("modulus must be positive, got " + std::to_string(k));
    for (const auto& r : rows) {
        if (r.length < 1) throw InvalidRow("row length must be >= 1, got " + std::to_string(r.length));
        if (r.start < 1 || r.start > k)
            throw InvalidRow("row start " + std::to_string(r.start) + " outside [1, " + std::to_string(k) + "]");
    }
    std::sort(rows.begin(), rows.end(), row_precedes);
    FilledDiagram out;
    out.modulus_ = k;
    out.sign_ = sign;
    out.rows_ = std::move(rows);
    return out;
}

inline FilledDiagram empty_diagram(int k, Sign sign) { return canonicalize({}, k, sign); }

/// Builds a diagram from (length, start) -> multiplicity data.
inline FilledDiagram from_multiplicities(const std::map<int, std::vector<int>>& mult, int k, Sign sign) {
    std::vector<FilledRow> rows;
    for (const auto& [length, counts] : mult)
        for (std::size_t j = 0; j < counts.size(); ++j)
            for (int c = 0; c < counts[j]; ++c) rows.push_back({length, static_cast<int>(j) + 1});
    return canonicalize(std::move(rows), k, sign);
}

inline DimensionVector dimension_vector(const FilledDiagram& lambda) {
    DimensionVector d = DimensionVector::zeros(lambda.modulus());
    for (const auto& r : lambda.rows())
        for (int label : row_labels(r, lambda.modulus(), lambda.sign())) ++d[static_cast<std::size_t>(label - 1)];
    return d;
}

namespace detail {

inline std::vector<int> row_box_counts(int length, int start, int k, Sign sign) {
    std::vector<int> counts(static_cast<std::size_t>(k), 0);
    for (int label : row_labels({length, start}, k, sign)) ++counts[static_cast<std::size_t>(label - 1)];
    return counts;
}

// Walks (length, start) pairs in canonical order, choosing multiplicities
// while the remaining dimension vector stays nonnegative.
class DiagramSearch {
public:
    DiagramSearch(int k, Sign sign, std::vector<int> remaining)
        : k_(k), sign_(sign), remaining_(std::move(remaining)) {
        left_ = std::accumulate(remaining_.begin(), remaining_.end(), 0);
        for (int len = 1; len <= left_; ++len) {
            std::vector<std::vector<int>> per_start;
            for (int j = 1; j <= k_; ++j) per_start.push_back(row_box_counts(len, j, k_, sign_));
            counts_.push_back(std::move(per_start));
        }
    }

    std::vector<FilledDiagram> run() {
        if (left_ == 0) {
            out_.push_back(canonicalize({}, k_, sign_));
            return std::move(out_);
        }
        visit(left_, 1);
        return std::move(out_);
    }

private:
    void visit(int length, int start) {
        if (left_ == 0) {
            out_.push_back(canonicalize(rows_, k_, sign_));
            return;
        }
        if (length == 0) return;
        const int next_len = start == k_ ? length - 1 : length;
        const int next_start = start == k_ ? 1 : start + 1;
        const auto& box = counts_[static_cast<std::size_t>(length - 1)][static_cast<std::size_t>(start - 1)];

        visit(next_len, next_start);
        int added = 0;
        while (fits(box)) {
            apply(box, -1);
            rows_.push_back({length, start});
            left_ -= length;
            ++added;
            visit(next_len, next_start);
        }
        for (int i = 0; i < added; ++i) {
            apply(box, +1);
            rows_.pop_back();
            left_ += length;
        }
    }

    bool fits(const std::vector<int>& box) const {
        for (std::size_t i = 0; i < box.size(); ++i)
            if (box[i] > remaining_[i]) return false;
        return true;
    }

    void apply(const std::vector<int>& box, int sgn) {
        for (std::size_t i = 0; i < box.size(); ++i) remaining_[i] += sgn * box[i];
    }

    int k_;
    Sign sign_;
    std::vector<int> remaining_;
    int left_ = 0;
    std::vector<std::vector<std::vector<int>>> counts_;
    std::vector<FilledRow> rows_;
    std::vector<FilledDiagram> out_;
};

inline void size_search(int k, Sign sign, int length, int start, int left, int step, std::vector<FilledRow>& rows,
                        std::vector<FilledDiagram>& out) {
    if (left == 0) {
        out.push_back(canonicalize(rows, k, sign));
        return;
    }
    if (length <= 0) return;
    const int next_len = start == k ? length - step : length;
    const int next_start = start == k ? 1 : start + 1;
    size_search(k, sign, next_len, next_start, left, step, rows, out);
    int added = 0;
    while (left >= length) {
        rows.push_back({length, start});
        left -= length;
        ++added;
        size_search(k, sign, next_len, next_start, left, step, rows, out);
    }
    rows.resize(rows.size() - static_cast<std::size_t>(added));
}

} // namespace detail

/// The set of (k, sign)-diagrams with dimension vector d, sorted.
inline std::vector<FilledDiagram> enumerate_diagrams(int k, Sign sign, const DimensionVector& d) {
    if (d.size() != k)
        throw ModulusMismatch("dimension vector has " + std::to_string(d.size()) + " entries, modulus is " +
                              std::to_string(k));
    if (!d.nonnegative()) throw PreconditionError("dimension vector has a negative entry");
    auto out = detail::DiagramSearch(k, sign, d.entries()).run();
    std::sort(out.begin(), out.end());
    return out;
}

/// All (k, sign)-diagrams with N boxes whose row lengths are multiples of
/// step, sorted. Enumerated directly over colored rows rather than through
/// the dimension vectors.
inline std::vector<FilledDiagram> enumerate_by_size(int k, Sign sign, int N, int step = 1) {
    if (k < 1) throw PreconditionError("modulus must be positive");
    if (N < 0) throw PreconditionError("size must be nonnegative");
    if (step < 1) throw PreconditionError("step must be positive");
    std::vector<FilledDiagram> out;
    if (N % step != 0) return out;
    std::vector<FilledRow> rows;
    detail::size_search(k, sign, N, 1, N, step, rows, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// Partitions of n in descending lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int max_part) -> void {
        if (left == 0) {
            Partition p;
            p.parts = cur;
            out.push_back(std::move(p));
            return;
        }
        for (int part = std::min(left, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, left - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// iota-tuples of partitions with total size n. Ordered by the size
/// composition (first component largest first), then componentwise by
/// partition order.
inline std::vector<MultiPartition> multipartitions(int iota, int n) {
    if (iota < 1) throw PreconditionError("multipartition arity must be >= 1");
    std::vector<MultiPartition> out;
    if (n < 0) return out;
    std::vector<std::vector<Partition>> table;
    for (int j = 0; j <= n; ++j) table.push_back(partitions(j));

    std::vector<int> sizes(static_cast<std::size_t>(iota), 0);
    auto emit = [&](auto&& self, std::size_t slot, MultiPartition& acc) -> void {
        if (slot == sizes.size()) {
            out.push_back(acc);
            return;
        }
        for (const auto& p : table[static_cast<std::size_t>(sizes[slot])]) {
            acc.components.push_back(p);
            self(self, slot + 1, acc);
            acc.components.pop_back();
        }
    };
    auto compose = [&](auto&& self, std::size_t slot, int left) -> void {
        if (slot + 1 == sizes.size()) {
            sizes[slot] = left;
            MultiPartition acc;
            emit(emit, 0, acc);
            return;
        }
        for (int s = left; s >= 0; --s) {
            sizes[slot] = s;
            self(self, slot + 1, left - s);
        }
    };
    compose(compose, 0, n);
    return out;
}

/// Compact text form such as "2_1 1_2"; "()" for the empty diagram.
inline std::string to_string(const FilledDiagram& lambda) {
    if (lambda.empty()) return "()";
    std::string s;
    for (const auto& r : lambda.rows()) {
        if (!s.empty()) s += ' ';
        s += std::to_string(r.length) + "_" + std::to_string(r.start);
    }
    return s;
}

inline std::string to_string(const Partition& p) {
    if (p.empty()) return "()";
    std::string s = "(";
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.parts[i]);
    }
    return s + ")";
}

inline std::string to_string(const MultiPartition& mp) {
    std::string s = "[";
    for (std::size_t i = 0; i < mp.components.size(); ++i) {
        if (i) s += ' ';
        s += to_string(mp.components[i]);
    }
    return s + "]";
}

inline std::string to_string(const DimensionVector& d) {
    std::string s = "(";
    for (int i = 0; i < d.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(d[static_cast<std::size_t>(i)]);
    }
    return s + ")";
}

} // namespace gcs

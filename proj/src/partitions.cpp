#include "maclab/partitions.hpp"

#include "maclab/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace maclab {

Partition::Partition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw Error(ErrorKind::InvalidParts, "parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw Error(ErrorKind::InvalidParts, "parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

int Partition::durfee() const
{
    int d = 0;
    while (d < length() && parts_[d] >= d + 1) ++d;
    return d;
}

Partition Partition::conjugate() const
{
    std::vector<int> c(part(1), 0);
    for (int r : parts_) {
        for (int j = 0; j < r; ++j) ++c[j];
    }
    return Partition(std::move(c));
}

bool Partition::contains(Box b) const { return b.row >= 1 && b.col >= 1 && b.col <= part(b.row); }

std::string Partition::str() const
{
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
    out << ")";
    return out.str();
}

namespace {

int conj_part(const Partition& p, int c)
{
    int n = 0;
    while (n < p.length() && p.parts()[n] >= c) ++n;
    return n;
}

void require_box(const Partition& p, Box b)
{
    if (!p.contains(b)) {
        throw Error(ErrorKind::BoxOutOfShape,
            "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ") not in " + p.str());
    }
}

} // namespace

int arm(const Partition& p, Box b)
{
    require_box(p, b);
    return p.part(b.row) - b.col;
}

int leg(const Partition& p, Box b)
{
    require_box(p, b);
    return conj_part(p, b.col) - b.row;
}

int hook_length(const Partition& p, Box b) { return arm(p, b) + leg(p, b) + 1; }

int epsilon(const Partition& p, Box b)
{
    require_box(p, b);
    return b.row <= b.col ? 1 : -1;
}

std::vector<HookBox> hook_boxes(const Partition& p)
{
    std::vector<HookBox> out;
    out.reserve(p.weight());
    Partition c = p.conjugate();
    for (int r = 1; r <= p.length(); ++r) {
        for (int col = 1; col <= p.part(r); ++col) {
            HookBox hb;
            hb.box = {r, col};
            hb.hook = (p.part(r) - col) + (c.part(col) - r) + 1;
            hb.eps = r <= col ? 1 : -1;
            out.push_back(hb);
        }
    }
    return out;
}

std::vector<int> hook_multiset(const Partition& p)
{
    std::vector<int> h;
    for (const auto& hb : hook_boxes(p)) h.push_back(hb.hook);
    std::sort(h.rbegin(), h.rend());
    return h;
}

std::vector<int> hooks_mod(const Partition& p, int t)
{
    if (t <= 0) throw Error(ErrorKind::ParameterOutOfRange, "t must be positive");
    std::vector<int> h;
    for (int x : hook_multiset(p)) {
        if (x % t == 0) h.push_back(x);
    }
    return h;
}

std::vector<int> diagonal_hooks(const Partition& p)
{
    std::vector<int> h;
    for (int i = 1; i <= p.durfee(); ++i) h.push_back(hook_length(p, {i, i}));
    return h;
}

BoundaryWord::BoundaryWord(long offset, std::vector<uint8_t> window)
{
    std::size_t lo = 0, hi = window.size();
    while (lo < hi && window[lo] == 0) ++lo;
    while (hi > lo && window[hi - 1] == 1) --hi;
    offset_ = offset + static_cast<long>(lo);
    window_.assign(window.begin() + lo, window.begin() + hi);
    for (auto x : window_) {
        if (x > 1) throw Error(ErrorKind::UnbalancedWord, "letters must be 0 or 1");
    }
}

int BoundaryWord::at(long k) const
{
    if (k < offset_) return 0;
    if (k >= end()) return 1;
    return window_[k - offset_];
}

long BoundaryWord::imbalance() const
{
    long ones_neg = 0, zeros_nonneg = 0;
    for (std::size_t i = 0; i < window_.size(); ++i) {
        long k = offset_ + static_cast<long>(i);
        if (k < 0 && window_[i] == 1) ++ones_neg;
        if (k >= 0 && window_[i] == 0) ++zeros_nonneg;
    }
    if (offset_ > 0) zeros_nonneg += offset_;
    if (end() < 0) ones_neg += -end();
    return ones_neg - zeros_nonneg;
}

BoundaryWord BoundaryWord::shifted(long shift) const
{
    BoundaryWord w = *this;
    w.offset_ -= shift;
    return w;
}

std::string BoundaryWord::str() const
{
    std::string s = std::to_string(offset_) + ":";
    for (auto x : window_) s += static_cast<char>('0' + x);
    return s;
}

BoundaryWord encode_word(const Partition& p)
{
    std::vector<uint8_t> letters;
    letters.reserve(p.part(1) + p.length());
    for (int i = p.length(); i >= 1; --i) {
        for (int k = 0; k < p.part(i) - p.part(i + 1); ++k) letters.push_back(1);
        letters.push_back(0);
    }
    return BoundaryWord(-p.length(), std::move(letters));
}

Partition decode_word(const BoundaryWord& w)
{
    if (!w.balanced()) {
        throw Error(ErrorKind::UnbalancedWord, w.str() + " has imbalance " + std::to_string(w.imbalance()));
    }
    std::vector<int> parts;
    int ones = 0;
    for (auto x : w.window()) {
        if (x == 1) {
            ++ones;
        } else {
            parts.push_back(ones);
        }
    }
    std::reverse(parts.begin(), parts.end());
    return Partition(std::move(parts));
}

std::pair<long, long> box_indices(const Partition& p, Box b)
{
    require_box(p, b);
    long j = p.part(b.row) - b.row;
    long i = b.col - 1 - conj_part(p, b.col);
    return {i, j};
}

Box box_from_indices(const Partition& p, long i, long j)
{
    BoundaryWord w = encode_word(p);
    if (!(i < j) || w.at(i) != 1 || w.at(j) != 0) {
        throw Error(ErrorKind::NotAHookPair, "(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    int row = 0, col = 0;
    for (int r = 1; r <= p.length(); ++r) {
        if (p.part(r) - r == j) row = r;
    }
    for (int c = 1; c <= p.part(1); ++c) {
        if (c - 1 - conj_part(p, c) == i) col = c;
    }
    return {row, col};
}

bool is_self_conjugate(const Partition& p) { return p == p.conjugate(); }

bool is_doubled_distinct(const Partition& p)
{
    Partition c = p.conjugate();
    int d = p.durfee();
    for (int i = 1; i <= d; ++i) {
        if (p.part(i) != c.part(i) + 1) return false;
    }
    return true;
}

bool is_doubled_distinct_conjugate(const Partition& p) { return is_doubled_distinct(p.conjugate()); }

namespace {

/** Check c_{-k-s} = 1 - c_k for all k >= 0 (only a finite range matters). */
bool word_reflection(const BoundaryWord& w, long s)
{
    long reach = std::max(std::labs(w.offset()), std::labs(w.end())) + std::labs(s) + 2;
    for (long k = 0; k <= reach; ++k) {
        if (w.at(-k - s) != 1 - w.at(k)) return false;
    }
    return true;
}

} // namespace

bool word_is_self_conjugate(const BoundaryWord& w) { return word_reflection(w, 1); }

bool word_is_doubled_distinct(const BoundaryWord& w)
{
    if (w.at(0) != 1) return false;
    long reach = std::max(std::labs(w.offset()), std::labs(w.end())) + 2;
    for (long k = 1; k <= reach; ++k) {
        if (w.at(-k) != 1 - w.at(k)) return false;
    }
    return true;
}

bool word_is_doubled_distinct_conjugate(const BoundaryWord& w) { return w.at(-1) == 0 && word_reflection(w, 2); }

Partition from_frobenius(const std::vector<int>& a, const std::vector<int>& b)
{
    if (a.size() != b.size()) throw Error(ErrorKind::InvalidParts, "Frobenius rows of different lengths");
    int d = static_cast<int>(a.size());
    for (int i = 0; i < d; ++i) {
        if (a[i] < 0 || b[i] < 0 || (i > 0 && (a[i] >= a[i - 1] || b[i] >= b[i - 1]))) {
            throw Error(ErrorKind::InvalidParts, "Frobenius coordinates must be strictly decreasing and non-negative");
        }
    }
    std::vector<int> parts;
    for (int i = 1; i <= d; ++i) parts.push_back(a[i - 1] + i);
    for (int i = d + 1;; ++i) {
        int n = 0;
        for (int j = 1; j <= d; ++j) {
            if (b[j - 1] + j >= i) ++n;
        }
        if (n == 0) break;
        parts.push_back(n);
    }
    return Partition(std::move(parts));
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = 1; p <= std::min(remaining, max_part); ++p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

void gen_strict(int remaining, int max_part, int min_part, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    out.push_back(cur);
    for (int p = min_part; p <= std::min(remaining, max_part); ++p) {
        cur.push_back(p);
        gen_strict(remaining - p, p - 1, min_part, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int weight)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    if (weight < 0) return out;
    gen_partitions(weight, weight, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> all_partitions(int max_weight)
{
    std::vector<Partition> out;
    for (int n = 0; n <= max_weight; ++n) {
        auto ps = partitions_of(n);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

std::vector<std::vector<int>> strict_partitions(int max_weight, int min_part)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    gen_strict(max_weight, max_weight, min_part, cur, out);
    return out;
}

} // namespace maclab

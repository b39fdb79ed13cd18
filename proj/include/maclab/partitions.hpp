#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace maclab {

/** A box of a Ferrers diagram, 1-based (row, column). */
struct Box {
    int row = 0;
    int col = 0;
    auto operator<=>(const Box&) const = default;
};

/** Integer partition stored as weakly decreasing positive parts. */
class Partition {
public:
    Partition() = default;
    /** Validates the parts (positive, weakly decreasing); throws InvalidParts. */
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /** lambda_i with 1-based i; zero beyond the length. */
    int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
    /** Side of the Durfee square = number of diagonal boxes. */
    int durfee() const;
    Partition conjugate() const;
    bool contains(Box b) const;

    auto operator<=>(const Partition& other) const = default;
    std::string str() const;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/** A box together with its hook length and sign. */
struct HookBox {
    Box box;
    int hook = 0;
    int eps = 0;
    bool diagonal() const { return box.row == box.col; }
};

int arm(const Partition& p, Box b);
int leg(const Partition& p, Box b);
int hook_length(const Partition& p, Box b);
/** +1 on or above the main diagonal, -1 strictly below. */
int epsilon(const Partition& p, Box b);

/** All boxes with hook data, row by row. */
std::vector<HookBox> hook_boxes(const Partition& p);
/** Hook lengths sorted in decreasing order. */
std::vector<int> hook_multiset(const Partition& p);
/** Hook lengths divisible by t, sorted decreasingly. */
std::vector<int> hooks_mod(const Partition& p, int t);
/** Hook lengths of the diagonal boxes, top-left first. */
std::vector<int> diagonal_hooks(const Partition& p);

/**
 * Bi-infinite 0/1 word: letters before `offset` are 0, letters from
 * offset + size() on are 1; the stored window is canonical (starts with 1,
 * ends with 0) or empty.
 */
class BoundaryWord {
public:
    BoundaryWord() = default;
    /** Canonicalises an arbitrary window; does not check balance. */
    BoundaryWord(long offset, std::vector<uint8_t> window);

    int at(long k) const;
    long offset() const { return offset_; }
    long end() const { return offset_ + static_cast<long>(window_.size()); }
    const std::vector<uint8_t>& window() const { return window_; }
    /** #{k < 0 : c_k = 1} - #{k >= 0 : c_k = 0}; zero for partition words. */
    long imbalance() const;
    bool balanced() const { return imbalance() == 0; }
    /** The word d with d_k = c_{k + shift}. */
    BoundaryWord shifted(long shift) const;

    bool operator==(const BoundaryWord& other) const = default;
    std::string str() const;

private:
    long offset_ = 0;
    std::vector<uint8_t> window_;
};

/** Boundary word of a partition (0 = vertical step, 1 = horizontal step). */
BoundaryWord encode_word(const Partition& p);
/** Inverse of encode_word; throws UnbalancedWord. */
Partition decode_word(const BoundaryWord& w);

/** Index pair (i, j), i < j, c_i = 1, c_j = 0, of a box; j - i is its hook. */
std::pair<long, long> box_indices(const Partition& p, Box b);
/** Box of an index pair; throws NotAHookPair. */
Box box_from_indices(const Partition& p, long i, long j);

bool is_self_conjugate(const Partition& p);
/** Doubled distinct: lambda_i = lambda'_i + 1 on the Durfee square. */
bool is_doubled_distinct(const Partition& p);
/** Conjugates of doubled distinct partitions. */
bool is_doubled_distinct_conjugate(const Partition& p);

/** The same three membership tests read off the boundary word. */
bool word_is_self_conjugate(const BoundaryWord& w);
bool word_is_doubled_distinct(const BoundaryWord& w);
bool word_is_doubled_distinct_conjugate(const BoundaryWord& w);

/** Partition from Frobenius coordinates (a_1 > ... | b_1 > ...). */
Partition from_frobenius(const std::vector<int>& a, const std::vector<int>& b);

/** All partitions of weight <= max_weight, by weight then lexicographically. */
std::vector<Partition> all_partitions(int max_weight);
/** All partitions of exactly `weight`, lexicographically. */
std::vector<Partition> partitions_of(int weight);
/** Strict partitions with distinct parts >= `min_part`, weight <= max_weight (unsorted). */
std::vector<std::vector<int>> strict_partitions(int max_weight, int min_part);

} // namespace maclab

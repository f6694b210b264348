#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "eqlc/ints.hpp"

namespace eqlc {

// Weakly decreasing positive parts; the empty sequence is the unique
// partition of 0.  Immutable after construction.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return (int)parts_.size(); }
    int part(int i) const { return i < (int)parts_.size() ? parts_[i] : 0; }
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    // Canonical text form, e.g. "[3,1]"; "[]" for the empty partition.
    std::string text() const;

  private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// Canonical total order: by weight, then reverse lexicographic within a
// weight ((4) before (3,1) before (2,2) ...).  This is the enumeration and
// serialization order used everywhere.
struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const;
};

Partition parse_partition(const std::string& s);

// All partitions of n in canonical (reverse lexicographic) order.
std::vector<Partition> enumerate_partitions(int n);

// p(n) by direct enumeration-free recurrence.
Int partition_count(int n);

// Shared per-weight index: canonical list plus position lookup.  Built once
// per n, immutable afterwards; safe to share across threads.
class WeightIndex {
  public:
    static const WeightIndex& get(int n);

    int weight() const { return n_; }
    const std::vector<Partition>& list() const { return list_; }
    std::size_t size() const { return list_.size(); }
    const Partition& at(int i) const { return list_[i]; }
    int position(const Partition& p) const;  // throws WeightMismatchError if |p| != n

  private:
    explicit WeightIndex(int n);
    int n_;
    std::vector<Partition> list_;
    std::unordered_map<Partition, int, PartitionHash> pos_;
};

Partition conjugate(const Partition& p);

// z_lambda = prod_j j^{m_j} m_j!
Int z_of(const Partition& p);

// n!/z_lambda: size of the conjugacy class with this cycle type.
Int class_size(const Partition& p);

// n!/prod(hooks): dimension of the irreducible indexed by p.
Int hook_dimension(const Partition& p);

// Adds n-|p| boxes to the first row; rejects n <= |p|.
Partition first_row_grow(const Partition& p, int n);

}  // namespace eqlc

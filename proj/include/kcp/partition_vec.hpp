#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace kcp {

// Partition in ascending canonical form: 1 <= a_1 <= a_2 <= ... <= a_r.
class PartitionVec {
public:
    explicit PartitionVec(std::vector<unsigned long> parts);

    // "1,2,3" with ascending positive parts; anything else is rejected.
    static PartitionVec parse(const std::string& text);

    const std::vector<unsigned long>& parts() const { return parts_; }
    unsigned long part(std::size_t i) const { return parts_.at(i); } // 0-based
    unsigned long total() const { return total_; }                   // n
    std::size_t size() const { return parts_.size(); }               // r
    unsigned long max_part() const { return parts_.back(); }

    std::string str() const; // "(1,2,3)"

    bool operator==(const PartitionVec& o) const { return parts_ == o.parts_; }
    bool operator!=(const PartitionVec& o) const { return !(*this == o); }
    // ascending-lexicographic over the part vectors
    bool operator<(const PartitionVec& o) const { return parts_ < o.parts_; }

private:
    std::vector<unsigned long> parts_;
    unsigned long total_;
};

// All partitions of n into exactly r parts, ascending-lexicographic, no
// duplicates. r = 0 or r > n is rejected.
std::vector<PartitionVec> enumerate_partitions(unsigned long n, std::size_t r);

} // namespace kcp

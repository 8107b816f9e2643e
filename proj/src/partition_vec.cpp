#include "kcp/partition_vec.hpp"

#include <stdexcept>

namespace kcp {

PartitionVec::PartitionVec(std::vector<unsigned long> parts)
    : parts_(std::move(parts)), total_(0)
{
    if (parts_.empty())
        throw std::invalid_argument("partition must have at least one part");
    unsigned long prev = 0;
    for (unsigned long p : parts_) {
        if (p == 0)
            throw std::invalid_argument("partition parts must be positive");
        if (p < prev)
            throw std::invalid_argument("partition parts must be ascending");
        prev = p;
        total_ += p;
    }
}

PartitionVec PartitionVec::parse(const std::string& text)
{
    std::vector<unsigned long> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos
                                               ? std::string::npos
                                               : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad partition token '" + tok + "' in '"
                                        + text + "'");
        parts.push_back(std::stoul(tok));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
        if (pos == text.size())
            throw std::invalid_argument("trailing comma in '" + text + "'");
    }
    if (parts.empty())
        throw std::invalid_argument("empty partition string");
    return PartitionVec(std::move(parts));
}

std::string PartitionVec::str() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ')';
    return out;
}

namespace {

void gen(unsigned long n, std::size_t r, unsigned long min_part,
         std::vector<unsigned long>& acc, std::vector<PartitionVec>& out)
{
    if (r == 1) {
        if (n >= min_part) {
            acc.push_back(n);
            out.emplace_back(acc);
            acc.pop_back();
        }
        return;
    }
    // remaining r-1 parts are each >= p, so p <= n/r keeps the tail feasible
    for (unsigned long p = min_part; p * r <= n; ++p) {
        acc.push_back(p);
        gen(n - p, r - 1, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<PartitionVec> enumerate_partitions(unsigned long n, std::size_t r)
{
    if (r == 0 || r > n)
        throw std::invalid_argument("enumerate_partitions: need 1 <= r <= n");
    std::vector<PartitionVec> out;
    std::vector<unsigned long> acc;
    acc.reserve(r);
    gen(n, r, 1, acc, out);
    return out;
}

} // namespace kcp

#include "eqlc/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "eqlc/errors.hpp"

namespace eqlc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw Error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw Error("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

std::string Partition::text() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ']';
    return s;
}

bool PartitionLess::operator()(const Partition& a, const Partition& b) const {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    // reverse lex: larger sequence first
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

std::size_t PartitionHash::operator()(const Partition& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.parts()) {
        h ^= (std::size_t)x;
        h *= 1099511628211ull;
    }
    return h;
}

Partition parse_partition(const std::string& s) {
    auto l = s.find('[');
    auto r = s.rfind(']');
    if (l == std::string::npos || r == std::string::npos || r < l)
        throw Error("malformed partition text: " + s);
    std::string body = s.substr(l + 1, r - l - 1);
    std::vector<int> parts;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

namespace {

void enum_rec(int remaining, int max_part, std::vector<int>& prefix,
              std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int k = std::min(max_part, remaining); k >= 1; --k) {
        prefix.push_back(k);
        enum_rec(remaining - k, k, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw Error("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> prefix;
    enum_rec(n, n, prefix, out);
    return out;
}

Int partition_count(int n) {
    // Euler pentagonal recurrence.
    static std::mutex mu;
    static std::vector<Int> memo{1};
    std::lock_guard<std::mutex> lock(mu);
    while ((int)memo.size() <= n) {
        int m = (int)memo.size();
        Int v = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            int sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= m) v += sign * memo[m - g1];
            if (g2 <= m) v += sign * memo[m - g2];
        }
        memo.push_back(v);
    }
    return memo[n];
}

WeightIndex::WeightIndex(int n) : n_(n), list_(enumerate_partitions(n)) {
    pos_.reserve(list_.size());
    for (int i = 0; i < (int)list_.size(); ++i) pos_.emplace(list_[i], i);
}

const WeightIndex& WeightIndex::get(int n) {
    static std::mutex mu;
    static std::map<int, const WeightIndex*> store;
    std::lock_guard<std::mutex> lock(mu);
    auto it = store.find(n);
    if (it == store.end()) it = store.emplace(n, new WeightIndex(n)).first;
    return *it->second;
}

int WeightIndex::position(const Partition& p) const {
    auto it = pos_.find(p);
    if (it == pos_.end())
        throw WeightMismatchError("partition " + p.text() + " is not a partition of " +
                                  std::to_string(n_));
    return it->second;
}

Partition conjugate(const Partition& p) {
    std::vector<int> cols;
    cols.reserve(p.part(0));
    for (int c = 0; c < p.part(0); ++c) {
        int len = 0;
        for (int r = 0; r < p.length(); ++r)
            if (p.parts()[r] > c) ++len;
        cols.push_back(len);
    }
    return Partition(std::move(cols));
}

Int z_of(const Partition& p) {
    Int z = 1;
    int i = 0;
    const auto& parts = p.parts();
    while (i < (int)parts.size()) {
        int j = i;
        while (j < (int)parts.size() && parts[j] == parts[i]) ++j;
        int mult = j - i;
        for (int t = 0; t < mult; ++t) z *= parts[i];
        z *= factorial(mult);
        i = j;
    }
    return z;
}

Int class_size(const Partition& p) { return factorial(p.weight()) / z_of(p); }

Int hook_dimension(const Partition& p) {
    Int hooks = 1;
    Partition conj = conjugate(p);
    for (int r = 0; r < p.length(); ++r)
        for (int c = 0; c < p.parts()[r]; ++c)
            hooks *= (p.parts()[r] - c) + (conj.parts()[c] - r) - 1;
    return factorial(p.weight()) / hooks;
}

Partition first_row_grow(const Partition& p, int n) {
    if (n <= p.weight())
        throw Error("first_row_grow: target weight " + std::to_string(n) +
                    " must exceed " + std::to_string(p.weight()));
    std::vector<int> parts = p.parts();
    int add = n - p.weight();
    if (parts.empty())
        parts.push_back(add);
    else
        parts[0] += add;
    return Partition(std::move(parts));
}

}  // namespace eqlc

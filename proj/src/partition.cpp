#include "vvjack/partition.hpp"

#include <algorithm>
#include <sstream>

#include "vvjack/errors.hpp"

namespace vvjack {

Partition Partition::raw(std::vector<int> parts) {
    Partition p;
    p.parts_ = std::move(parts);
    for (int v : p.parts_) p.n_ += v;
    return p;
}

Partition::Partition(std::vector<int> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw InvalidShape("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1]) throw InvalidShape("partition parts must be non-increasing");
    }
    parts_ = std::move(parts);
    for (int v : parts_) n_ += v;
    if (!admissible()) {
        throw InvalidShape("shape " + to_string() + " must have at least two rows and two columns");
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw InvalidShape("bad part '" + item + "'");
            parts.push_back(v);
        } catch (const std::logic_error&) {
            throw InvalidShape("bad shape text '" + text + "'");
        }
    }
    return Partition(std::move(parts));
}

int Partition::hook(int row, int col) const {
    if (row < 0 || row >= length() || col < 0 || col >= parts_[static_cast<std::size_t>(row)]) {
        throw IndexOutOfRange("cell outside diagram");
    }
    int below = 0;
    for (int k = row + 1; k < length() && parts_[static_cast<std::size_t>(k)] > col; ++k) ++below;
    return parts_[static_cast<std::size_t>(row)] - col + below;
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition::raw(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::vector<Partition> admissible_shapes(int n) {
    std::vector<Partition> out;
    for (auto& p : partitions_of(n)) {
        if (p.admissible()) out.push_back(p);
    }
    return out;
}

}  // namespace vvjack

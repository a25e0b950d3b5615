#include "gradedres/betti_table.hpp"

#include <algorithm>
#include <sstream>

namespace gradedres {

void BettiTable::add(int i, int j, long rank) {
    if (rank == 0) return;
    entries_[{i, j}] += rank;
}

long BettiTable::entry(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

long BettiTable::row_sum(int i) const {
    long s = 0;
    for (const auto& [key, r] : entries_)
        if (key.first == i) s += r;
    return s;
}

std::vector<long> BettiTable::row_sums() const {
    std::vector<long> out(projective_dimension() + 1, 0);
    for (const auto& [key, r] : entries_) out.at(key.first) += r;
    return out;
}

long BettiTable::total() const {
    long s = 0;
    for (const auto& [key, r] : entries_) s += r;
    return s;
}

int BettiTable::projective_dimension() const {
    int pd = 0;
    for (const auto& [key, r] : entries_) pd = std::max(pd, key.first);
    return pd;
}

std::string BettiTable::render_grid() const {
    if (entries_.empty()) return "(zero module)\n";
    int imax = 0, slice_lo = 0, slice_hi = 0;
    bool first = true;
    for (const auto& [key, r] : entries_) {
        int slice = key.second - key.first;
        imax = std::max(imax, key.first);
        if (first) {
            slice_lo = slice_hi = slice;
            first = false;
        } else {
            slice_lo = std::min(slice_lo, slice);
            slice_hi = std::max(slice_hi, slice);
        }
    }
    auto cell = [&](int i, int slice) -> std::string {
        long v = entry(i, slice + i);
        return v == 0 ? "." : std::to_string(v);
    };
    std::size_t width = 1;
    for (int s = slice_lo; s <= slice_hi; ++s)
        for (int i = 0; i <= imax; ++i) width = std::max(width, cell(i, s).size());
    width = std::max(width, std::to_string(imax).size());

    std::ostringstream os;
    os << "      ";
    for (int i = 0; i <= imax; ++i) {
        os.width(static_cast<int>(width) + 1);
        os << i;
    }
    os << "\n";
    for (int s = slice_lo; s <= slice_hi; ++s) {
        os.width(4);
        os << s;
        os << ": ";
        for (int i = 0; i <= imax; ++i) {
            os.width(static_cast<int>(width) + 1);
            os << cell(i, s);
        }
        os << "\n";
    }
    os << "total:";
    for (int i = 0; i <= imax; ++i) {
        os.width(static_cast<int>(width) + 1);
        os << row_sum(i);
    }
    os << "\n";
    return os.str();
}

}  // namespace gradedres

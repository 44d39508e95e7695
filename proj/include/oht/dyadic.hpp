#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oht/signal.hpp"

// Integer dyadic intervals on a translated grid, and r-averages over them.
// All intervals have length at least 16 (level >= 4).  Two intervals with
// the same grid offset are nested or disjoint.

namespace oht {

constexpr int kMinDyadicLevel = 4;

struct DyadicInterval {
    int level;           // length = 2^level, level >= 4
    std::int64_t index;  // grid cell index at this level
    std::int64_t offset; // grid translation, common to all levels

    DyadicInterval(int level_, std::int64_t index_, std::int64_t offset_ = 0)
        : level(level_), index(index_), offset(offset_) {
        if (level < kMinDyadicLevel || level > 56)
            throw std::invalid_argument("DyadicInterval: level out of range");
    }

    std::int64_t length() const noexcept { return std::int64_t(1) << level; }
    std::int64_t begin() const noexcept { return offset + (index << level); }
    std::int64_t end() const noexcept { return begin() + length(); }

    bool contains(std::int64_t x) const noexcept { return x >= begin() && x < end(); }

    bool contains(const DyadicInterval& o) const noexcept {
        return begin() <= o.begin() && o.end() <= end();
    }

    bool intersects(const DyadicInterval& o) const noexcept {
        return begin() < o.end() && o.begin() < end();
    }

    DyadicInterval parent() const {
        return DyadicInterval(level + 1, detail::floor_div(index, 2), offset);
    }

    std::pair<DyadicInterval, DyadicInterval> children() const {
        if (level <= kMinDyadicLevel)
            throw std::logic_error("DyadicInterval: no children below the minimum level");
        return {DyadicInterval(level - 1, 2 * index, offset),
                DyadicInterval(level - 1, 2 * index + 1, offset)};
    }

    /// The level-`level` grid cell containing x.
    static DyadicInterval containing(int level, std::int64_t x, std::int64_t offset = 0) {
        return DyadicInterval(level, detail::floor_div(x - offset, std::int64_t(1) << level), offset);
    }

    friend bool operator==(const DyadicInterval& a, const DyadicInterval& b) {
        return a.level == b.level && a.index == b.index && a.offset == b.offset;
    }

    friend std::ostream& operator<<(std::ostream& os, const DyadicInterval& I) {
        return os << "[" << I.begin() << "," << I.end() << ")@2^" << I.level;
    }
};

/// All intervals of one scale whose union covers [range_begin, range_end).
inline std::vector<DyadicInterval> scale_partition(int level, std::int64_t offset,
                                                   std::int64_t range_begin,
                                                   std::int64_t range_end) {
    if (level < kMinDyadicLevel) throw std::invalid_argument("scale_partition: level < 4");
    std::vector<DyadicInterval> out;
    if (range_end <= range_begin) return out;
    const std::int64_t len = std::int64_t(1) << level;
    std::int64_t m = detail::floor_div(range_begin - offset, len);
    const std::int64_t m_end = detail::floor_div(range_end - 1 - offset, len);
    for (; m <= m_end; ++m) out.emplace_back(level, m, offset);
    return out;
}

/// <f>_{[begin,end),r} = [ |I|^{ -1} sum_{x in I} |f(x)|^r ]^{1/r}.
/// The signal is treated as zero outside its support.
inline double average(const FiniteSignal& f, std::int64_t begin, std::int64_t end, double r = 1.0) {
    if (end <= begin) throw std::invalid_argument("average: empty interval");
    if (r < 1.0) throw std::domain_error("average: exponent r must be >= 1");
    const std::int64_t lo = std::max(begin, f.begin());
    const std::int64_t hi = std::min(end, f.end());
    double s = 0;
    if (r == 1.0) {
        for (std::int64_t x = lo; x < hi; ++x) s += std::abs(f.at(x));
        return s / double(end - begin);
    }
    if (r == 2.0) {
        for (std::int64_t x = lo; x < hi; ++x) s += std::norm(f.at(x));
        return std::sqrt(s / double(end - begin));
    }
    for (std::int64_t x = lo; x < hi; ++x) s += std::pow(std::abs(f.at(x)), r);
    return std::pow(s / double(end - begin), 1.0 / r);
}

inline double average(const FiniteSignal& f, const DyadicInterval& I, double r = 1.0) {
    return average(f, I.begin(), I.end(), r);
}

} // namespace oht

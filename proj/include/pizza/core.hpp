#pragma once

// Pizza boards, cuts, almost alternating colorings and cyclic intervals.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pizza {

using Size = std::int64_t;
using Piece = std::size_t;

enum class ErrorKind {
    Parse,
    InvalidArgument,
    IllegalMove,
    Precondition,
    Infeasible,
    NotFound,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/**
 * A circular board of exact non-negative piece sizes, listed clockwise from
 * piece 0. Piece indices are cyclic: piece i is piece i mod n.
 */
class Pizza {
public:
    explicit Pizza(std::vector<Size> sizes);

    std::size_t n() const noexcept { return sizes_.size(); }
    Size total() const noexcept { return total_; }
    std::span<const Size> sizes() const noexcept { return sizes_; }

    Size operator[](Piece p) const noexcept { return sizes_[p % sizes_.size()]; }

    /// Reduces a possibly negative offset to a piece index.
    Piece wrap(std::ptrdiff_t index) const noexcept
    {
        const auto m = static_cast<std::ptrdiff_t>(sizes_.size());
        return static_cast<Piece>(((index % m) + m) % m);
    }

    bool operator==(const Pizza& other) const = default;

private:
    std::vector<Size> sizes_;
    Size total_ = 0;
};

/// The gap between piece (index - 1 mod n) and piece index.
struct Cut {
    std::size_t index = 0;
    auto operator<=>(const Cut&) const = default;
};

/// Consecutive pieces start, start+1, ..., start+length-1 (cyclic).
struct Interval {
    Piece start = 0;
    std::size_t length = 0;

    Piece at(std::size_t offset, std::size_t n) const noexcept { return (start + offset) % n; }
    Piece last(std::size_t n) const noexcept { return (start + length + n - 1) % n; }
    bool contains(Piece p, std::size_t n) const noexcept { return (p + n - start) % n < length; }
    /// Position of p counted from start; only meaningful when contains(p).
    std::size_t offset_of(Piece p, std::size_t n) const noexcept { return (p + n - start) % n; }
    /// Cut at the clockwise end of the interval.
    Cut end_cut(std::size_t n) const noexcept { return Cut{(start + length) % n}; }

    std::vector<Piece> pieces(std::size_t n) const;

    bool operator==(const Interval&) const = default;
};

struct Coloring {
    Cut cut;
    std::vector<Piece> red;   // clockwise from the cut
    std::vector<Piece> green; // clockwise from the cut
    std::vector<bool> is_red; // indexed by piece
};

struct IntervalPair {
    Interval odd;
    Interval even;
};

/// Almost alternating coloring induced by a cut; n must be odd.
Coloring coloring_from_cut(const Pizza& pizza, Cut cut);

/// Size of R(cut) without materializing the coloring; n must be odd.
Size red_size(const Pizza& pizza, Cut cut);

/// True iff p is red in the coloring induced by cut (n odd).
inline bool is_red(std::size_t n, Cut cut, Piece p) noexcept { return (p + n - cut.index) % n % 2 == 0; }

/// The two cyclic intervals bounded by a and b, tagged by parity; n must be odd.
IntervalPair interval_between(const Pizza& pizza, Cut a, Cut b);

/// Interval running clockwise from cut a up to cut b.
Interval interval_from(std::size_t n, Cut a, Cut b);

Size set_size(const Pizza& pizza, std::span<const Piece> pieces);
Size interval_size(const Pizza& pizza, const Interval& interval);

Pizza parse_pizza(std::string_view text);
std::string serialize_pizza(const Pizza& pizza);

} // namespace pizza

#pragma once

// Best answers, easy/hard classification and the tripartition of hard pizzas.

#include "pizza/core.hpp"

#include <array>
#include <optional>
#include <vector>

namespace pizza {

struct BestAnswerTable {
    std::vector<Size> cut_value;                 // ||R(C)|| per cut
    std::vector<std::vector<Piece>> answered;    // A(C) per cut, ascending
    std::vector<Size> piece_value;               // best-answer value per piece
    std::vector<std::vector<Cut>> best_cuts;     // best answers per piece, ascending

    bool is_best_answer(Cut c) const { return !answered[c.index].empty(); }
};

struct BestAnswers {
    Size value = 0;
    std::vector<Cut> cuts;
};

/// Cuts C with p in R(C) minimizing ||R(C)||.
BestAnswers best_answers(const Pizza& pizza, Piece p);

BestAnswerTable build_best_answer_table(const Pizza& pizza);

enum class Difficulty { Easy, Hard };

struct Hardness {
    Difficulty classification = Difficulty::Easy;
    Piece witness = 0;      // opening whose follow-Bob guarantee is best
    Size best_fb_value = 0; // that guarantee
};

Hardness classify(const Pizza& pizza);
inline bool is_hard(const Pizza& pizza) { return classify(pizza).classification == Difficulty::Hard; }

/// Cuts minimizing ||R(C)|| over all cuts.
std::vector<Cut> worst_cuts(const BestAnswerTable& table);
/// Best answers maximizing ||R(C)||.
std::vector<Cut> best_cuts(const BestAnswerTable& table);

struct SpecialCuts {
    Cut worst;
    Cut best;
    Cut mid;
    Piece p_hat = 0;
    std::optional<Piece> p_tilde;
};

/**
 * Selects Cworst, Cbest, Cmid with smallest-index tie-breaking. When
 * forced_worst is given it is used as Cworst; it must be a minimizing cut.
 * Throws Error(Precondition) for easy pizzas.
 */
SpecialCuts choose_special_cuts(const Pizza& pizza, const BestAnswerTable& table,
                                std::optional<Cut> forced_worst = std::nullopt);

enum class PartName { B = 0, M = 1, W = 2 };
inline constexpr std::array<PartName, 3> all_parts{PartName::B, PartName::M, PartName::W};
char part_letter(PartName x);
PartName part_from_letter(char c);

struct PartSizes {
    Size b_major = 0, b_minor = 0;
    Size m_major = 0, m_minor = 0;
    Size w_major = 0, w_minor = 0;

    Size major(PartName x) const;
    Size minor(PartName x) const;
    Size total() const { return b_major + b_minor + m_major + m_minor + w_major + w_minor; }
    std::array<Size, 6> as_array() const { return {b_major, b_minor, m_major, m_minor, w_major, w_minor}; }
    bool operator==(const PartSizes&) const = default;
};

/// Minor pieces sit at even offsets of a part (both borders), majors at odd offsets.
inline bool is_minor_offset(std::size_t offset) noexcept { return offset % 2 == 0; }

struct Tripartition {
    SpecialCuts cuts;
    std::array<Interval, 3> parts; // indexed by PartName
    PartSizes sizes;

    const Interval& part(PartName x) const { return parts[static_cast<std::size_t>(x)]; }
    std::vector<Piece> majors(PartName x, std::size_t n) const;
    std::vector<Piece> minors(PartName x, std::size_t n) const;
    /// Part containing piece p.
    PartName part_of(Piece p, std::size_t n) const;
};

Tripartition tripartition(const Pizza& pizza, std::optional<Cut> forced_worst = std::nullopt);
Tripartition tripartition(const Pizza& pizza, const BestAnswerTable& table,
                          std::optional<Cut> forced_worst = std::nullopt);

/**
 * A major piece of the part (odd offsets) such that the major sizes from it to
 * either border are each at least half the part's major size; first clockwise.
 */
Piece middle_piece(const Pizza& pizza, const Interval& part);

struct XPizza {
    Pizza pizza;
    Cut glue_cut{0};
    std::vector<Piece> index_map; // X-pizza piece -> whole-pizza piece
    Interval part;

    std::optional<Piece> local_index(Piece whole, std::size_t whole_n) const;
};

XPizza glue_x_pizza(const Pizza& pizza, const Tripartition& tri, PartName x);
XPizza glue_interval(const Pizza& pizza, const Interval& part);

} // namespace pizza

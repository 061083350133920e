#pragma once

#include <string>
#include <vector>

#include "gridpoly/polyomino.hpp"

// Non-attacking rook configurations on the cells of a polyomino.

namespace gridpoly {

// Block: two rooks attack when they share a maximal horizontal or vertical
// block of cells. Ambient: they attack when they share a row or column of
// the ambient grid, seeing across holes.
enum class AttackConvention { Block, Ambient };

std::string to_string(AttackConvention c);

using RookConfig = std::vector<Cell>;  // canonical cell order

bool attacking(const Polyomino& p, Cell a, Cell b,
               AttackConvention convention = AttackConvention::Block);

bool is_non_attacking(const Polyomino& p, const RookConfig& config,
                      AttackConvention convention = AttackConvention::Block);

// all non-attacking k-rook configurations, each in canonical cell order,
// the list itself in lexicographic order
std::vector<RookConfig> rook_configs(const Polyomino& p, int k,
                                     AttackConvention convention = AttackConvention::Block);

// coefficient k counts non-attacking k-configurations; degree = rook number
std::vector<long long> rook_polynomial(const Polyomino& p,
                                       AttackConvention convention = AttackConvention::Block);

// largest k with a non-attacking k-configuration
int rook_number(const Polyomino& p, AttackConvention convention = AttackConvention::Block);

}  // namespace gridpoly

#pragma once

// Brute-force attack oracle, written independently of the library's ray
// tables: every enemy piece is tested against the raw geometric rule for
// its kind, scanning the whole board each time.

#include "chessgaze/chess.hpp"

#include <cmath>
#include <cstdlib>

namespace oracle {

using chessgaze::chess::BoardState;
using chessgaze::chess::Color;
using chessgaze::chess::PieceKind;
using chessgaze::chess::Square;

inline bool path_clear(const BoardState& b, Square from, Square to) {
    int df = to.file - from.file;
    int dr = to.rank - from.rank;
    int steps = std::max(std::abs(df), std::abs(dr));
    int sf = df == 0 ? 0 : (df > 0 ? 1 : -1);
    int sr = dr == 0 ? 0 : (dr > 0 ? 1 : -1);
    for (int k = 1; k < steps; ++k) {
        if (b.at({from.file + k * sf, from.rank + k * sr})) return false;
    }
    return true;
}

inline bool piece_attacks(const BoardState& b, Square from, Square target) {
    const auto& p = b.at(from);
    if (!p) return false;
    int df = target.file - from.file;
    int dr = target.rank - from.rank;
    int adf = std::abs(df), adr = std::abs(dr);
    if (adf == 0 && adr == 0) return false;
    switch (p->kind) {
        case PieceKind::Pawn: {
            int fwd = p->color == Color::White ? 1 : -1;
            return adf == 1 && dr == fwd;
        }
        case PieceKind::Knight:
            return (adf == 1 && adr == 2) || (adf == 2 && adr == 1);
        case PieceKind::Bishop:
            return adf == adr && path_clear(b, from, target);
        case PieceKind::Rook:
            return (df == 0 || dr == 0) && path_clear(b, from, target);
        case PieceKind::Queen:
            return (adf == adr || df == 0 || dr == 0) && path_clear(b, from, target);
        case PieceKind::King:
            return adf <= 1 && adr <= 1;
    }
    return false;
}

inline bool square_attacked(const BoardState& b, Square target, Color by) {
    for (int i = 0; i < 64; ++i) {
        Square from = Square::from_index(i);
        const auto& p = b.at(from);
        if (p && p->color == by && piece_attacks(b, from, target)) return true;
    }
    return false;
}

inline bool in_check(const BoardState& b, Color color) {
    for (int i = 0; i < 64; ++i) {
        Square s = Square::from_index(i);
        const auto& p = b.at(s);
        if (p && p->kind == PieceKind::King && p->color == color) {
            return oracle::square_attacked(b, s, color == Color::White ? Color::Black : Color::White);
        }
    }
    return false;
}

} // namespace oracle

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chessgaze/errors.hpp"

namespace chessgaze::chess {

enum class Color : std::uint8_t { White, Black };

constexpr Color opponent(Color c) {
    return c == Color::White ? Color::Black : Color::White;
}

enum class PieceKind : std::uint8_t { Pawn, Knight, Bishop, Rook, Queen, King };

struct Piece {
    PieceKind kind;
    Color color;
    bool operator==(const Piece&) const = default;
};

/// Board coordinates: file 0..7 = a..h, rank 0..7 = 1..8.
struct Square {
    int file = 0;
    int rank = 0;

    constexpr int index() const { return rank * 8 + file; }
    constexpr bool valid() const { return file >= 0 && file < 8 && rank >= 0 && rank < 8; }
    static constexpr Square from_index(int i) { return {i % 8, i / 8}; }

    std::string name() const;             // "e4"
    static Square from_name(std::string_view);

    bool operator==(const Square&) const = default;
};

struct CastlingRights {
    bool white_kingside = false;
    bool white_queenside = false;
    bool black_kingside = false;
    bool black_queenside = false;
    bool operator==(const CastlingRights&) const = default;
};

struct BoardState {
    std::array<std::optional<Piece>, 64> squares{};
    Color side_to_move = Color::White;
    CastlingRights castling{};
    std::optional<Square> en_passant{};
    int halfmove_clock = 0;
    int fullmove_number = 1;

    const std::optional<Piece>& at(Square s) const { return squares[s.index()]; }
    std::optional<Piece>& at(Square s) { return squares[s.index()]; }
    std::optional<Square> king_square(Color c) const;

    bool operator==(const BoardState&) const = default;
};

struct MoveRecord {
    Square from{};
    Square to{};
    Piece piece{};
    std::optional<Piece> captured{};
    std::optional<PieceKind> promotion{};
    bool is_castle = false;
    bool is_en_passant = false;
    bool gives_check = false;
    std::string san;

    bool operator==(const MoveRecord&) const = default;
};

struct Game {
    std::map<std::string, std::string> tags;
    std::vector<MoveRecord> moves;
    BoardState initial;
};

BoardState standard_start();

/// Parses a 6-field FEN string. Throws MalformedFen.
BoardState parse_fen(std::string_view text);

/// Canonical FEN for a board; inverse of parse_fen.
std::string to_fen(const BoardState& board);

/// True iff color's king is attacked by any enemy piece.
bool is_in_check(const BoardState& board, Color color);

/// True iff `by` attacks square `target` under standard attack rules.
bool square_attacked(const BoardState& board, Square target, Color by);

/// All legal moves for the side to move. MoveRecord::san is left empty.
std::vector<MoveRecord> legal_moves(const BoardState& board);

/// Applies a resolved move without re-checking legality.
BoardState apply_move(const BoardState& board, const MoveRecord& move);

/// Resolves a SAN token against the position and applies it.
/// Throws IllegalMove (no legal match) or AmbiguousMove (several).
std::pair<BoardState, MoveRecord> apply_san(const BoardState& board, std::string_view san);

/// Squares strictly between from and to for sliding trajectories and
/// two-square pawn pushes; castling yields the king's crossed square.
/// Knights and single-step moves have no path.
std::vector<Square> move_path(const MoveRecord& move);

/// Flips every piece's color in place, the side to move, and swaps the
/// castling rights between colors. Piece positions are unchanged.
BoardState swap_colors(const BoardState& board);

/// Raw PGN game record: tag pairs plus the mainline SAN tokens.
/// Comments, NAGs and variations are already stripped.
struct RawGame {
    std::map<std::string, std::string> tags;
    std::vector<std::string> san_tokens;
    int index = 0;
};

/// Streaming PGN reader; next() yields one raw game at a time so callers
/// can skip games that fail to replay. Throws MalformedPgn.
class PgnReader {
public:
    explicit PgnReader(std::string_view text) : text_(text) {}
    std::optional<RawGame> next();

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int index_ = 0;
};

/// Replays a raw game into a fully resolved Game.
/// Throws IllegalMove/AmbiguousMove with the game index and ply.
Game resolve_game(const RawGame& raw);

/// Parses every game in the text. Throws on the first malformed or
/// illegal game; batch pipelines that want to skip instead should use
/// PgnReader + resolve_game directly.
std::vector<Game> parse_pgn(std::string_view text);

} // namespace chessgaze::chess

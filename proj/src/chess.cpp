#include "chessgaze/chess.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace chessgaze::chess {

namespace {

constexpr std::array<std::pair<int, int>, 8> kKnightSteps{{
    {1, 2}, {2, 1}, {2, -1}, {1, -2}, {-1, -2}, {-2, -1}, {-2, 1}, {-1, 2}}};
constexpr std::array<std::pair<int, int>, 8> kKingSteps{{
    {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}}};
constexpr std::array<std::pair<int, int>, 4> kRookDirs{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
constexpr std::array<std::pair<int, int>, 4> kBishopDirs{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

char piece_letter(PieceKind k) {
    switch (k) {
        case PieceKind::Pawn: return 'p';
        case PieceKind::Knight: return 'n';
        case PieceKind::Bishop: return 'b';
        case PieceKind::Rook: return 'r';
        case PieceKind::Queen: return 'q';
        case PieceKind::King: return 'k';
    }
    return '?';
}

std::optional<PieceKind> kind_from_letter(char c) {
    switch (std::tolower(static_cast<unsigned char>(c))) {
        case 'p': return PieceKind::Pawn;
        case 'n': return PieceKind::Knight;
        case 'b': return PieceKind::Bishop;
        case 'r': return PieceKind::Rook;
        case 'q': return PieceKind::Queen;
        case 'k': return PieceKind::King;
        default: return std::nullopt;
    }
}

int pawn_dir(Color c) { return c == Color::White ? 1 : -1; }

} // namespace

std::string Square::name() const {
    std::string s;
    s += static_cast<char>('a' + file);
    s += static_cast<char>('1' + rank);
    return s;
}

Square Square::from_name(std::string_view n) {
    if (n.size() != 2 || n[0] < 'a' || n[0] > 'h' || n[1] < '1' || n[1] > '8') {
        throw DataError("bad square name: " + std::string(n));
    }
    return {n[0] - 'a', n[1] - '1'};
}

std::optional<Square> BoardState::king_square(Color c) const {
    for (int i = 0; i < 64; ++i) {
        if (squares[i] && squares[i]->kind == PieceKind::King && squares[i]->color == c) {
            return Square::from_index(i);
        }
    }
    return std::nullopt;
}

BoardState standard_start() {
    return parse_fen("rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - 0 1");
}

BoardState parse_fen(std::string_view text) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find(' ', start);
        if (end == std::string_view::npos) end = text.size();
        if (end > start) fields.emplace_back(text.substr(start, end - start));
        start = end + 1;
    }
    if (fields.size() != 6) {
        throw MalformedFen("expected 6 FEN fields, got " + std::to_string(fields.size()));
    }

    BoardState board;
    // Field 1: piece placement from rank 8 down to rank 1.
    int rank = 7, file = 0;
    for (char c : fields[0]) {
        if (c == '/') {
            if (file != 8) throw MalformedFen("rank does not sum to 8");
            if (--rank < 0) throw MalformedFen("too many ranks");
            file = 0;
        } else if (c >= '1' && c <= '8') {
            file += c - '0';
            if (file > 8) throw MalformedFen("rank sums past 8");
        } else {
            auto kind = kind_from_letter(c);
            if (!kind) throw MalformedFen(std::string("bad piece letter: ") + c);
            if (file > 7) throw MalformedFen("rank sums past 8");
            Color color = std::isupper(static_cast<unsigned char>(c)) ? Color::White : Color::Black;
            board.at({file, rank}) = Piece{*kind, color};
            ++file;
        }
    }
    if (rank != 0 || file != 8) throw MalformedFen("placement does not cover 8 ranks");

    int kings[2] = {0, 0};
    for (int i = 0; i < 64; ++i) {
        if (!board.squares[i]) continue;
        const Piece& p = *board.squares[i];
        if (p.kind == PieceKind::King) ++kings[static_cast<int>(p.color)];
        if (p.kind == PieceKind::Pawn && (i / 8 == 0 || i / 8 == 7)) {
            throw MalformedFen("pawn on back rank");
        }
    }
    if (kings[0] != 1 || kings[1] != 1) throw MalformedFen("need exactly one king per color");

    if (fields[1] == "w") board.side_to_move = Color::White;
    else if (fields[1] == "b") board.side_to_move = Color::Black;
    else throw MalformedFen("bad side to move: " + fields[1]);

    if (fields[2] != "-") {
        for (char c : fields[2]) {
            switch (c) {
                case 'K': board.castling.white_kingside = true; break;
                case 'Q': board.castling.white_queenside = true; break;
                case 'k': board.castling.black_kingside = true; break;
                case 'q': board.castling.black_queenside = true; break;
                default: throw MalformedFen(std::string("bad castling flag: ") + c);
            }
        }
    }

    if (fields[3] != "-") {
        Square ep = Square::from_name(fields[3]);
        if (ep.rank != 2 && ep.rank != 5) throw MalformedFen("en-passant square not on rank 3 or 6");
        board.en_passant = ep;
    }

    auto parse_int = [](const std::string& s, const char* what) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || ptr != s.data() + s.size() || value < 0) {
            throw MalformedFen(std::string("bad ") + what + ": " + s);
        }
        return value;
    };
    board.halfmove_clock = parse_int(fields[4], "halfmove clock");
    board.fullmove_number = parse_int(fields[5], "fullmove number");
    if (board.fullmove_number < 1) throw MalformedFen("fullmove number must be >= 1");
    return board;
}

std::string to_fen(const BoardState& board) {
    std::string fen;
    for (int rank = 7; rank >= 0; --rank) {
        int empty = 0;
        for (int file = 0; file < 8; ++file) {
            const auto& p = board.at({file, rank});
            if (!p) {
                ++empty;
                continue;
            }
            if (empty > 0) {
                fen += static_cast<char>('0' + empty);
                empty = 0;
            }
            char c = piece_letter(p->kind);
            fen += p->color == Color::White ? static_cast<char>(std::toupper(c)) : c;
        }
        if (empty > 0) fen += static_cast<char>('0' + empty);
        if (rank > 0) fen += '/';
    }
    fen += board.side_to_move == Color::White ? " w " : " b ";
    std::string rights;
    if (board.castling.white_kingside) rights += 'K';
    if (board.castling.white_queenside) rights += 'Q';
    if (board.castling.black_kingside) rights += 'k';
    if (board.castling.black_queenside) rights += 'q';
    fen += rights.empty() ? "-" : rights;
    fen += ' ';
    fen += board.en_passant ? board.en_passant->name() : "-";
    fen += ' ';
    fen += std::to_string(board.halfmove_clock);
    fen += ' ';
    fen += std::to_string(board.fullmove_number);
    return fen;
}

bool square_attacked(const BoardState& board, Square target, Color by) {
    // Pawn attacks come from one rank behind the target, relative to `by`.
    int dir = pawn_dir(by);
    for (int df : {-1, 1}) {
        Square s{target.file + df, target.rank - dir};
        if (s.valid()) {
            const auto& p = board.at(s);
            if (p && p->color == by && p->kind == PieceKind::Pawn) return true;
        }
    }
    for (auto [df, dr] : kKnightSteps) {
        Square s{target.file + df, target.rank + dr};
        if (s.valid()) {
            const auto& p = board.at(s);
            if (p && p->color == by && p->kind == PieceKind::Knight) return true;
        }
    }
    for (auto [df, dr] : kKingSteps) {
        Square s{target.file + df, target.rank + dr};
        if (s.valid()) {
            const auto& p = board.at(s);
            if (p && p->color == by && p->kind == PieceKind::King) return true;
        }
    }
    auto scan = [&](auto dirs, PieceKind slider) {
        for (auto [df, dr] : dirs) {
            Square s{target.file + df, target.rank + dr};
            while (s.valid()) {
                const auto& p = board.at(s);
                if (p) {
                    if (p->color == by && (p->kind == slider || p->kind == PieceKind::Queen)) return true;
                    break;
                }
                s.file += df;
                s.rank += dr;
            }
        }
        return false;
    };
    return scan(kRookDirs, PieceKind::Rook) || scan(kBishopDirs, PieceKind::Bishop);
}

bool is_in_check(const BoardState& board, Color color) {
    auto king = board.king_square(color);
    return king && square_attacked(board, *king, opponent(color));
}

BoardState apply_move(const BoardState& board, const MoveRecord& move) {
    BoardState next = board;
    Color mover = move.piece.color;

    next.at(move.from).reset();
    if (move.is_en_passant) {
        next.at({move.to.file, move.from.rank}).reset();
    }
    Piece placed = move.piece;
    if (move.promotion) placed.kind = *move.promotion;
    next.at(move.to) = placed;

    if (move.is_castle) {
        int rank = move.from.rank;
        if (move.to.file == 6) { // kingside: rook h -> f
            next.at({5, rank}) = next.at({7, rank});
            next.at({7, rank}).reset();
        } else { // queenside: rook a -> d
            next.at({3, rank}) = next.at({0, rank});
            next.at({0, rank}).reset();
        }
    }

    // Castling rights fall with king moves, rook moves, and rook captures.
    auto drop_rights_at = [&next](Square s) {
        if (s == Square{0, 0}) next.castling.white_queenside = false;
        if (s == Square{7, 0}) next.castling.white_kingside = false;
        if (s == Square{0, 7}) next.castling.black_queenside = false;
        if (s == Square{7, 7}) next.castling.black_kingside = false;
    };
    if (move.piece.kind == PieceKind::King) {
        if (mover == Color::White) {
            next.castling.white_kingside = next.castling.white_queenside = false;
        } else {
            next.castling.black_kingside = next.castling.black_queenside = false;
        }
    }
    drop_rights_at(move.from);
    drop_rights_at(move.to);

    if (move.piece.kind == PieceKind::Pawn &&
        std::abs(move.to.rank - move.from.rank) == 2) {
        next.en_passant = Square{move.from.file, (move.from.rank + move.to.rank) / 2};
    } else {
        next.en_passant.reset();
    }

    if (move.piece.kind == PieceKind::Pawn || move.captured) {
        next.halfmove_clock = 0;
    } else {
        next.halfmove_clock = board.halfmove_clock + 1;
    }
    if (mover == Color::Black) next.fullmove_number = board.fullmove_number + 1;
    next.side_to_move = opponent(mover);
    return next;
}

namespace {

void push_if_legal(const BoardState& board, MoveRecord move, std::vector<MoveRecord>& out) {
    BoardState next = apply_move(board, move);
    if (!is_in_check(next, move.piece.color)) {
        out.push_back(std::move(move));
    }
}

void gen_pawn_moves(const BoardState& board, Square from, std::vector<MoveRecord>& out) {
    Color us = board.side_to_move;
    int dir = pawn_dir(us);
    int promo_rank = us == Color::White ? 7 : 0;
    int start_rank = us == Color::White ? 1 : 6;
    Piece pawn{PieceKind::Pawn, us};

    auto emit = [&](Square to, std::optional<Piece> captured, bool ep) {
        MoveRecord m{from, to, pawn, captured, std::nullopt, false, ep, false, {}};
        if (to.rank == promo_rank) {
            for (PieceKind k : {PieceKind::Queen, PieceKind::Rook, PieceKind::Bishop, PieceKind::Knight}) {
                m.promotion = k;
                push_if_legal(board, m, out);
            }
        } else {
            push_if_legal(board, m, out);
        }
    };

    Square one{from.file, from.rank + dir};
    if (one.valid() && !board.at(one)) {
        emit(one, std::nullopt, false);
        Square two{from.file, from.rank + 2 * dir};
        if (from.rank == start_rank && !board.at(two)) {
            emit(two, std::nullopt, false);
        }
    }
    for (int df : {-1, 1}) {
        Square to{from.file + df, from.rank + dir};
        if (!to.valid()) continue;
        const auto& p = board.at(to);
        if (p && p->color != us) {
            emit(to, p, false);
        } else if (!p && board.en_passant && to == *board.en_passant) {
            emit(to, Piece{PieceKind::Pawn, opponent(us)}, true);
        }
    }
}

void gen_step_moves(const BoardState& board, Square from, PieceKind kind,
                    std::vector<MoveRecord>& out) {
    Color us = board.side_to_move;
    const auto& steps = kind == PieceKind::Knight ? kKnightSteps : kKingSteps;
    for (auto [df, dr] : steps) {
        Square to{from.file + df, from.rank + dr};
        if (!to.valid()) continue;
        const auto& p = board.at(to);
        if (p && p->color == us) continue;
        push_if_legal(board, {from, to, Piece{kind, us}, p, std::nullopt, false, false, false, {}}, out);
    }
}

void gen_slider_moves(const BoardState& board, Square from, PieceKind kind,
                      std::vector<MoveRecord>& out) {
    Color us = board.side_to_move;
    auto run = [&](auto dirs) {
        for (auto [df, dr] : dirs) {
            Square to{from.file + df, from.rank + dr};
            while (to.valid()) {
                const auto& p = board.at(to);
                if (p && p->color == us) break;
                push_if_legal(board, {from, to, Piece{kind, us}, p, std::nullopt, false, false, false, {}}, out);
                if (p) break;
                to.file += df;
                to.rank += dr;
            }
        }
    };
    if (kind == PieceKind::Rook || kind == PieceKind::Queen) run(kRookDirs);
    if (kind == PieceKind::Bishop || kind == PieceKind::Queen) run(kBishopDirs);
}

void gen_castles(const BoardState& board, std::vector<MoveRecord>& out) {
    Color us = board.side_to_move;
    int rank = us == Color::White ? 0 : 7;
    Square king{4, rank};
    const auto& kp = board.at(king);
    if (!kp || kp->kind != PieceKind::King || kp->color != us) return;
    if (is_in_check(board, us)) return;
    Color them = opponent(us);

    bool kingside = us == Color::White ? board.castling.white_kingside : board.castling.black_kingside;
    bool queenside = us == Color::White ? board.castling.white_queenside : board.castling.black_queenside;

    auto rook_at = [&](int file) {
        const auto& p = board.at({file, rank});
        return p && p->kind == PieceKind::Rook && p->color == us;
    };
    if (kingside && rook_at(7) && !board.at({5, rank}) && !board.at({6, rank}) &&
        !square_attacked(board, {5, rank}, them) && !square_attacked(board, {6, rank}, them)) {
        push_if_legal(board, {king, {6, rank}, *kp, std::nullopt, std::nullopt, true, false, false, {}}, out);
    }
    if (queenside && rook_at(0) && !board.at({1, rank}) && !board.at({2, rank}) && !board.at({3, rank}) &&
        !square_attacked(board, {3, rank}, them) && !square_attacked(board, {2, rank}, them)) {
        push_if_legal(board, {king, {2, rank}, *kp, std::nullopt, std::nullopt, true, false, false, {}}, out);
    }
}

} // namespace

std::vector<MoveRecord> legal_moves(const BoardState& board) {
    std::vector<MoveRecord> out;
    for (int i = 0; i < 64; ++i) {
        const auto& p = board.squares[i];
        if (!p || p->color != board.side_to_move) continue;
        Square from = Square::from_index(i);
        switch (p->kind) {
            case PieceKind::Pawn: gen_pawn_moves(board, from, out); break;
            case PieceKind::Knight: gen_step_moves(board, from, PieceKind::Knight, out); break;
            case PieceKind::King: gen_step_moves(board, from, PieceKind::King, out); break;
            default: gen_slider_moves(board, from, p->kind, out); break;
        }
    }
    gen_castles(board, out);
    return out;
}

namespace {

struct SanPattern {
    PieceKind kind = PieceKind::Pawn;
    int from_file = -1; // -1: unconstrained
    int from_rank = -1;
    Square to{};
    std::optional<PieceKind> promotion{};
    bool capture = false;
    bool castle_kingside = false;
    bool castle_queenside = false;
};

SanPattern parse_san_token(std::string_view san) {
    std::string s(san);
    // Trailing check/annotation marks carry no move information.
    while (!s.empty() && (s.back() == '+' || s.back() == '#' || s.back() == '!' || s.back() == '?')) {
        s.pop_back();
    }
    SanPattern pat;
    if (s == "O-O" || s == "0-0") {
        pat.castle_kingside = true;
        return pat;
    }
    if (s == "O-O-O" || s == "0-0-0") {
        pat.castle_queenside = true;
        return pat;
    }

    std::size_t i = 0;
    if (i < s.size() && std::string_view("KQRBN").find(s[i]) != std::string_view::npos) {
        pat.kind = *kind_from_letter(s[i]);
        ++i;
    }

    std::optional<PieceKind> promo;
    if (s.size() >= 2) {
        std::size_t eq = s.rfind('=');
        if (eq != std::string::npos && eq + 1 < s.size()) {
            auto k = kind_from_letter(s[eq + 1]);
            if (!k || *k == PieceKind::King || *k == PieceKind::Pawn) {
                throw MalformedPgn("bad promotion piece in SAN: " + std::string(san));
            }
            promo = k;
            s.erase(eq);
        }
    }
    pat.promotion = promo;

    // The last two chars are the target square; anything between the piece
    // letter and the target is disambiguation and/or the capture mark.
    if (s.size() < i + 2) throw MalformedPgn("SAN token too short: " + std::string(san));
    std::string target = s.substr(s.size() - 2);
    if (target[0] < 'a' || target[0] > 'h' || target[1] < '1' || target[1] > '8') {
        throw MalformedPgn("bad SAN target square: " + std::string(san));
    }
    pat.to = Square::from_name(target);

    for (std::size_t j = i; j + 2 < s.size(); ++j) {
        char c = s[j];
        if (c == 'x') {
            pat.capture = true;
        } else if (c >= 'a' && c <= 'h') {
            pat.from_file = c - 'a';
        } else if (c >= '1' && c <= '8') {
            pat.from_rank = c - '1';
        } else {
            throw MalformedPgn(std::string("bad SAN character: ") + c + " in " + std::string(san));
        }
    }
    return pat;
}

std::string normalize_san(std::string_view san) {
    std::string s(san);
    while (!s.empty() && (s.back() == '!' || s.back() == '?')) s.pop_back();
    return s;
}

} // namespace

std::pair<BoardState, MoveRecord> apply_san(const BoardState& board, std::string_view san) {
    SanPattern pat = parse_san_token(san);
    std::vector<MoveRecord> matches;
    for (MoveRecord& m : legal_moves(board)) {
        if (pat.castle_kingside || pat.castle_queenside) {
            if (!m.is_castle) continue;
            if (pat.castle_kingside && m.to.file != 6) continue;
            if (pat.castle_queenside && m.to.file != 2) continue;
        } else {
            if (m.is_castle || m.piece.kind != pat.kind || !(m.to == pat.to)) continue;
            if (pat.from_file >= 0 && m.from.file != pat.from_file) continue;
            if (pat.from_rank >= 0 && m.from.rank != pat.from_rank) continue;
            if (pat.capture != m.captured.has_value()) continue;
            if (pat.promotion != m.promotion) continue;
        }
        matches.push_back(std::move(m));
    }
    if (matches.empty()) {
        throw IllegalMove("SAN names no legal move: " + std::string(san));
    }
    if (matches.size() > 1) {
        throw AmbiguousMove("SAN matches several moves: " + std::string(san));
    }
    MoveRecord move = std::move(matches.front());
    move.san = normalize_san(san);
    BoardState next = apply_move(board, move);
    move.gives_check = is_in_check(next, next.side_to_move);
    return {std::move(next), std::move(move)};
}

std::vector<Square> move_path(const MoveRecord& move) {
    if (move.piece.kind == PieceKind::Knight) return {};
    int df = move.to.file - move.from.file;
    int dr = move.to.rank - move.from.rank;
    bool straight = df == 0 || dr == 0;
    bool diagonal = std::abs(df) == std::abs(dr);
    if (!straight && !diagonal) return {};
    int steps = std::max(std::abs(df), std::abs(dr));
    if (steps <= 1) return {};
    int sf = df == 0 ? 0 : df / std::abs(df);
    int sr = dr == 0 ? 0 : dr / std::abs(dr);
    std::vector<Square> path;
    for (int k = 1; k < steps; ++k) {
        path.push_back({move.from.file + k * sf, move.from.rank + k * sr});
    }
    return path;
}

BoardState swap_colors(const BoardState& board) {
    BoardState out = board;
    for (auto& p : out.squares) {
        if (p) p->color = opponent(p->color);
    }
    out.side_to_move = opponent(board.side_to_move);
    out.castling.white_kingside = board.castling.black_kingside;
    out.castling.white_queenside = board.castling.black_queenside;
    out.castling.black_kingside = board.castling.white_kingside;
    out.castling.black_queenside = board.castling.white_queenside;
    return out;
}

} // namespace chessgaze::chess

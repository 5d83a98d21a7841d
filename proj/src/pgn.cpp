#include "chessgaze/chess.hpp"

#include <cctype>

namespace chessgaze::chess {

namespace {

bool is_result_token(std::string_view t) {
    return t == "1-0" || t == "0-1" || t == "1/2-1/2" || t == "*";
}

bool at_line_start(std::string_view text, std::size_t pos) {
    return pos == 0 || text[pos - 1] == '\n';
}

} // namespace

std::optional<RawGame> PgnReader::next() {
    RawGame game;
    game.index = index_;
    bool in_movetext = false;
    bool finished = false;

    while (pos_ < text_.size() && !finished) {
        char c = text_[pos_];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos_;
            continue;
        }
        if (c == '%' && at_line_start(text_, pos_)) {
            while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            continue;
        }
        if (c == ';') {
            while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            continue;
        }
        if (c == '{') {
            std::size_t close = text_.find('}', pos_ + 1);
            if (close == std::string_view::npos) throw MalformedPgn("unterminated { comment");
            pos_ = close + 1;
            continue;
        }
        if (c == '(') {
            int depth = 1;
            ++pos_;
            while (pos_ < text_.size() && depth > 0) {
                char d = text_[pos_];
                if (d == '{') {
                    std::size_t close = text_.find('}', pos_ + 1);
                    if (close == std::string_view::npos) throw MalformedPgn("unterminated { comment");
                    pos_ = close + 1;
                    continue;
                }
                if (d == '(') ++depth;
                if (d == ')') --depth;
                ++pos_;
            }
            if (depth > 0) throw MalformedPgn("unterminated variation");
            continue;
        }
        if (c == '$') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            continue;
        }
        if (c == '[') {
            if (in_movetext) break; // next game's tag section
            ++pos_;
            while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::size_t key_start = pos_;
            while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
                   text_[pos_] != '"' && text_[pos_] != ']') {
                ++pos_;
            }
            std::string key(text_.substr(key_start, pos_ - key_start));
            if (key.empty()) throw MalformedPgn("tag pair missing name");
            while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ >= text_.size() || text_[pos_] != '"') throw MalformedPgn("tag pair missing value");
            ++pos_;
            std::string value;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
                value += text_[pos_++];
            }
            if (pos_ >= text_.size()) throw MalformedPgn("unterminated tag value");
            ++pos_;
            while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ >= text_.size() || text_[pos_] != ']') throw MalformedPgn("unterminated tag pair");
            ++pos_;
            game.tags[key] = value;
            continue;
        }

        if (c == '}' || c == ')') throw MalformedPgn("unbalanced } or ) in movetext");

        std::size_t tok_start = pos_;
        while (pos_ < text_.size()) {
            char d = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(d)) || d == '{' || d == '}' ||
                d == '(' || d == ')' || d == ';') {
                break;
            }
            ++pos_;
        }
        std::string_view token = text_.substr(tok_start, pos_ - tok_start);
        in_movetext = true;
        if (is_result_token(token)) {
            finished = true;
            break;
        }
        // Move numbers can be glued to the move ("1.e4", "3...Nf6").
        std::size_t k = 0;
        while (k < token.size() && std::isdigit(static_cast<unsigned char>(token[k]))) ++k;
        if (k > 0) {
            std::size_t dots = k;
            while (dots < token.size() && token[dots] == '.') ++dots;
            if (dots == k) throw MalformedPgn("bad movetext token: " + std::string(token));
            token.remove_prefix(dots);
            if (token.empty()) continue;
            if (is_result_token(token)) {
                finished = true;
                break;
            }
        }
        game.san_tokens.emplace_back(token);
    }

    if (game.tags.empty() && game.san_tokens.empty() && !finished) return std::nullopt;
    ++index_;
    return game;
}

Game resolve_game(const RawGame& raw) {
    Game game;
    game.tags = raw.tags;
    auto fen_tag = raw.tags.find("FEN");
    game.initial = fen_tag != raw.tags.end() ? parse_fen(fen_tag->second) : standard_start();

    BoardState board = game.initial;
    for (std::size_t ply = 0; ply < raw.san_tokens.size(); ++ply) {
        const std::string& san = raw.san_tokens[ply];
        try {
            auto [next, move] = apply_san(board, san);
            board = next;
            game.moves.push_back(std::move(move));
        } catch (const AmbiguousMove&) {
            throw AmbiguousMove("game " + std::to_string(raw.index) + " ply " +
                                std::to_string(ply) + ": ambiguous SAN " + san);
        } catch (const IllegalMove&) {
            throw IllegalMove("game " + std::to_string(raw.index) + " ply " +
                                  std::to_string(ply) + ": illegal SAN " + san,
                              raw.index, static_cast<int>(ply));
        }
    }
    return game;
}

std::vector<Game> parse_pgn(std::string_view text) {
    PgnReader reader(text);
    std::vector<Game> games;
    while (auto raw = reader.next()) {
        games.push_back(resolve_game(*raw));
    }
    return games;
}

} // namespace chessgaze::chess

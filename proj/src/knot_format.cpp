#include "twoloop/knot_format.hpp"

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <vector>

namespace twoloop {

namespace {

struct Line {
    std::string text;  // comment stripped
    int number;        // 1-based
};

// Remove a '#' comment, honoring quoted strings with backslash escapes.
std::string strip_comment(const std::string& raw, int line_no) {
    bool in_quote = false;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const char c = raw[i];
        if (in_quote) {
            if (c == '\\') {
                if (i + 1 >= raw.size())
                    throw SyntaxError("dangling backslash", line_no,
                                      static_cast<int>(i) + 1);
                ++i;
            } else if (c == '"') {
                in_quote = false;
            }
        } else if (c == '"') {
            in_quote = true;
        } else if (c == '#') {
            return raw.substr(0, i);
        }
    }
    return raw;
}

bool is_blank(const std::string& s) {
    return s.find_first_not_of(" \t") == std::string::npos;
}

// Parse `keyword "value"` with \" and \\ escapes; the value must be the
// rest of the line.
std::string parse_quoted(const std::string& line, std::size_t pos, int line_no) {
    pos = line.find_first_not_of(" \t", pos);
    if (pos == std::string::npos || line[pos] != '"')
        throw SyntaxError("expected quoted string", line_no, static_cast<int>(pos) + 1);
    std::string value;
    for (std::size_t i = pos + 1; i < line.size(); ++i) {
        const char c = line[i];
        if (c == '\\') {
            if (i + 1 >= line.size() || (line[i + 1] != '"' && line[i + 1] != '\\'))
                throw SyntaxError("unsupported escape", line_no, static_cast<int>(i) + 1);
            value.push_back(line[++i]);
        } else if (c == '"') {
            if (!is_blank(line.substr(i + 1)))
                throw SyntaxError("trailing content after quoted string", line_no,
                                  static_cast<int>(i) + 2);
            return value;
        } else {
            value.push_back(c);
        }
    }
    throw SyntaxError("unterminated quoted string", line_no, static_cast<int>(pos) + 1);
}

std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> tokens;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) tokens.push_back(tok);
    return tokens;
}

std::int64_t parse_int64(const std::string& tok, int line_no, const char* what) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw SyntaxError(std::string("malformed ") + what + ": '" + tok + "'", line_no, 1);
    return value;
}

// "k" or "a/2" with odd a, returned as the doubled exponent.
std::int64_t parse_exponent(const std::string& tok, int line_no) {
    const auto slash = tok.find('/');
    if (slash == std::string::npos) return 2 * parse_int64(tok, line_no, "exponent");
    if (tok.substr(slash + 1) != "2")
        throw SyntaxError("exponent denominator must be 2: '" + tok + "'", line_no, 1);
    const std::int64_t numerator = parse_int64(tok.substr(0, slash), line_no, "exponent");
    if (numerator % 2 == 0)
        throw SyntaxError("half-integer exponent must have odd numerator: '" + tok + "'",
                          line_no, 1);
    return numerator;
}

bool is_integer_token(const std::string& tok) {
    if (tok.empty()) return false;
    std::size_t i = tok[0] == '-' ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9') return false;
    return true;
}

// "z" or "z/w"; must already be in lowest terms with w > 0.
Rational parse_coefficient(const std::string& tok, int line_no) {
    const auto slash = tok.find('/');
    const std::string num_text = slash == std::string::npos ? tok : tok.substr(0, slash);
    if (!is_integer_token(num_text))
        throw SyntaxError("malformed coefficient: '" + tok + "'", line_no, 1);
    Integer num(num_text);

    Integer den(1);
    if (slash != std::string::npos) {
        const std::string den_text = tok.substr(slash + 1);
        if (!is_integer_token(den_text))
            throw SyntaxError("malformed coefficient: '" + tok + "'", line_no, 1);
        den = Integer(den_text);
    }

    if (num == 0) throw ValidationError("zero coefficient");
    if (den <= 0) throw ValidationError("coefficient denominator not positive");
    Integer g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) throw ValidationError("coefficient not in lowest terms");
    return Rational(num, den);
}

std::string format_exponent(std::int64_t doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

std::string escape_quoted(const std::string& s) {
    std::string out;
    for (const char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

KnotRecord parse_record(std::string_view text) {
    std::vector<Line> lines;
    {
        int n = 1;
        std::size_t start = 0;
        while (start <= text.size()) {
            const auto nl = text.find('\n', start);
            const std::string raw(text.substr(
                start, nl == std::string_view::npos ? text.size() - start : nl - start));
            lines.push_back({strip_comment(raw, n), n});
            ++n;
            if (nl == std::string_view::npos) break;
            start = nl + 1;
        }
    }

    enum class State { ExpectKnot, ExpectSection, InAlexander, InTheta, Done };
    State state = State::ExpectKnot;
    bool saw_provenance = false;
    bool saw_alexander = false;

    KnotRecord record;
    LaurentPolynomial alexander;
    ThetaPolynomial theta;
    std::optional<std::int64_t> prev_alex_key;
    std::optional<ThetaPolynomial::Key> prev_theta_key;

    for (const Line& line : lines) {
        if (is_blank(line.text)) continue;
        const bool indented = line.text[0] == ' ' || line.text[0] == '\t';

        if (indented) {
            const auto tokens = split_tokens(line.text);
            if (state == State::InAlexander) {
                if (tokens.size() != 2)
                    throw SyntaxError("expected '<exp> <coeff>'", line.number, 1);
                const std::int64_t key = parse_exponent(tokens[0], line.number);
                const Rational c = parse_coefficient(tokens[1], line.number);
                if (prev_alex_key && key <= *prev_alex_key)
                    throw ValidationError("alexander terms not strictly ascending");
                prev_alex_key = key;
                alexander += LaurentPolynomial::monomial(c, key);
            } else if (state == State::InTheta) {
                if (tokens.size() != 3)
                    throw SyntaxError("expected '<n> <m> <coeff>'", line.number, 1);
                const ThetaPolynomial::Key key{parse_exponent(tokens[0], line.number),
                                               parse_exponent(tokens[1], line.number)};
                const Rational c = parse_coefficient(tokens[2], line.number);
                if (prev_theta_key && !(*prev_theta_key < key))
                    throw ValidationError("theta terms not strictly ascending");
                prev_theta_key = key;
                theta += ThetaPolynomial::monomial(c, key.first, key.second);
            } else {
                throw SyntaxError("indented term line outside a section", line.number, 1);
            }
            continue;
        }

        std::istringstream is(line.text);
        std::string keyword;
        is >> keyword;
        const std::size_t after = line.text.find(keyword) + keyword.size();

        if (state == State::Done)
            throw SyntaxError("content after 'end'", line.number, 1);

        if (keyword == "knot") {
            if (state != State::ExpectKnot)
                throw SyntaxError("duplicate 'knot' line", line.number, 1);
            record.name = parse_quoted(line.text, after, line.number);
            state = State::ExpectSection;
        } else if (keyword == "provenance") {
            if (state != State::ExpectSection || saw_provenance || saw_alexander)
                throw SyntaxError("misplaced 'provenance' line", line.number, 1);
            record.provenance = parse_quoted(line.text, after, line.number);
            saw_provenance = true;
        } else if (keyword == "alexander:") {
            if (state != State::ExpectSection || saw_alexander)
                throw SyntaxError("misplaced 'alexander:' section", line.number, 1);
            if (!is_blank(line.text.substr(after)))
                throw SyntaxError("trailing content after 'alexander:'", line.number,
                                  static_cast<int>(after) + 1);
            saw_alexander = true;
            state = State::InAlexander;
        } else if (keyword == "theta:") {
            if (state != State::InAlexander)
                throw SyntaxError("'theta:' must follow the alexander section",
                                  line.number, 1);
            if (!is_blank(line.text.substr(after)))
                throw SyntaxError("trailing content after 'theta:'", line.number,
                                  static_cast<int>(after) + 1);
            state = State::InTheta;
        } else if (keyword == "end") {
            if (state != State::InTheta)
                throw SyntaxError("'end' before both sections were given", line.number, 1);
            if (!is_blank(line.text.substr(after)))
                throw SyntaxError("trailing content after 'end'", line.number,
                                  static_cast<int>(after) + 1);
            state = State::Done;
        } else {
            throw SyntaxError("unknown keyword '" + keyword + "'", line.number, 1);
        }
    }

    if (state != State::Done)
        throw SyntaxError("unexpected end of input", static_cast<int>(lines.size()), 1);

    record.alexander = std::move(alexander);
    record.theta = std::move(theta);
    validate_record(record);
    return record;
}

std::string serialize_record(const KnotRecord& record) {
    std::ostringstream os;
    os << "# two-loop knot record\n";
    os << "# theta is the symmetrized 2-loop polynomial in the t3-eliminated basis\n";
    os << "# t1^n t2^m, stored at 12 times the usual normalization.\n";
    os << "knot \"" << escape_quoted(record.name) << "\"\n";
    if (!record.provenance.empty())
        os << "provenance \"" << escape_quoted(record.provenance) << "\"\n";
    os << "alexander:\n";
    for (const auto& [e, c] : record.alexander.terms())
        os << "  " << format_exponent(e) << " " << c.str() << "\n";
    os << "theta:\n";
    for (const auto& [k, c] : record.theta.terms())
        os << "  " << format_exponent(k.first) << " " << format_exponent(k.second) << " "
           << c.str() << "\n";
    os << "end\n";
    return os.str();
}

KnotRecord builtin_record(const std::string& name) {
    if (name == "unknot") return unknot_record();
    if (name.rfind("torus:", 0) == 0) {
        const std::string rest = name.substr(6);
        const auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw InvalidParamsError("expected torus:<p>:<q>, got '" + name + "'");
        std::int64_t p = 0;
        std::int64_t q = 0;
        const std::string p_text = rest.substr(0, colon);
        const std::string q_text = rest.substr(colon + 1);
        const auto [pp, pe] = std::from_chars(p_text.data(), p_text.data() + p_text.size(), p);
        const auto [qp, qe] = std::from_chars(q_text.data(), q_text.data() + q_text.size(), q);
        if (pe != std::errc{} || pp != p_text.data() + p_text.size() ||
            qe != std::errc{} || qp != q_text.data() + q_text.size())
            throw InvalidParamsError("expected torus:<p>:<q>, got '" + name + "'");
        return torus_record(p, q);
    }
    throw UnknownBuiltinError("unknown builtin record '" + name + "'");
}

}  // namespace twoloop

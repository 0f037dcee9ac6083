#include "submodkit/io.hpp"

#include <cmath>
#include <istream>
#include <sstream>
#include <string>

namespace submodkit {

namespace {

struct LineReader {
    std::istream& in;
    int line_no = 0;

    /// Next meaningful line: comments stripped from '#', blanks skipped.
    /// Returns false at end of input.
    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            const std::size_t hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            std::size_t begin = raw.find_first_not_of(" \t\r");
            if (begin == std::string::npos) continue;
            std::size_t end = raw.find_last_not_of(" \t\r");
            out = raw.substr(begin, end - begin + 1);
            return true;
        }
        return false;
    }
};

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

long parse_long(const std::string& tok, int line, int col) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(tok, &used);
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + tok + "'", line, col);
    }
    if (used != tok.size()) {
        throw ParseError("trailing characters after integer '" + tok + "'", line, col);
    }
    return v;
}

double parse_double(const std::string& tok, int line, int col) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception&) {
        throw ParseError("expected a number, got '" + tok + "'", line, col);
    }
    if (used != tok.size()) {
        throw ParseError("trailing characters after number '" + tok + "'", line, col);
    }
    return v;
}

/// "key=value" tokens of a header line.
std::string expect_kv(const std::string& tok, const std::string& key, int line) {
    const std::string prefix = key + "=";
    if (tok.rfind(prefix, 0) != 0) {
        throw ParseError("expected " + key + "=<...>, got '" + tok + "'", line, 1);
    }
    return tok.substr(prefix.size());
}

std::string double_repr(double v) {
    std::ostringstream oss;
    oss.precision(17);
    oss << v;
    return oss.str();
}

}  // namespace

SetFunction parse_set_function(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line)) throw ParseError("empty input", 1, 1);
    auto toks = split_ws(line);
    if (toks.size() != 2 || toks[0] != "setfn") {
        throw ParseError("expected header 'setfn n=<n>'", reader.line_no, 1);
    }
    const long n = parse_long(expect_kv(toks[1], "n", reader.line_no), reader.line_no, 7);
    if (n < 1 || n > max_ground_set_size()) {
        throw ParseError("n out of range", reader.line_no, 7);
    }

    const std::size_t table = std::size_t{1} << n;
    std::vector<double> values(table, 0.0);
    std::vector<bool> seen(table, false);
    std::size_t count = 0;
    while (reader.next(line)) {
        toks = split_ws(line);
        if (toks.size() != 2) {
            throw ParseError("expected '<bitmask-as-binary> <value>'", reader.line_no, 1);
        }
        if (static_cast<long>(toks[0].size()) != n) {
            throw ParseError("bitmask must have exactly " + std::to_string(n) + " binary digits",
                             reader.line_no, 1);
        }
        Mask mask = 0;
        for (std::size_t c = 0; c < toks[0].size(); ++c) {
            const char ch = toks[0][c];
            if (ch != '0' && ch != '1') {
                throw ParseError("bitmask digits must be 0 or 1", reader.line_no,
                                 static_cast<int>(c) + 1);
            }
            if (ch == '1') mask |= Mask{1} << (n - 1 - static_cast<long>(c));
        }
        if (seen[mask]) {
            throw ParseError("duplicate entry for subset " + toks[0], reader.line_no, 1);
        }
        seen[mask] = true;
        values[mask] = parse_double(toks[1], reader.line_no, static_cast<int>(toks[0].size()) + 2);
        ++count;
    }
    if (count != table) {
        throw ParseError("table has " + std::to_string(count) + " entries, needs " +
                         std::to_string(table),
                         reader.line_no + 1, 1);
    }
    return SetFunction(GroundSet::numbered(static_cast<int>(n)), std::move(values));
}

std::string format_set_function(const SetFunction& f) {
    std::ostringstream out;
    out << "setfn n=" << f.n() << "\n";
    for (Mask m = 0; m < f.ground().table_size(); ++m) {
        out << mask_to_binary(m, f.n()) << " " << double_repr(f(m)) << "\n";
    }
    return out.str();
}

JointPmf parse_joint_pmf(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line)) throw ParseError("empty input", 1, 1);
    auto toks = split_ws(line);
    if (toks.size() < 3 || toks.size() > 4 || toks[0] != "pmf") {
        throw ParseError("expected header 'pmf n=<n> sizes=<k1,...,kn> [values=...]'",
                         reader.line_no, 1);
    }
    const long n = parse_long(expect_kv(toks[1], "n", reader.line_no), reader.line_no, 5);
    if (n < 1 || n > 24) throw ParseError("n out of range", reader.line_no, 5);

    std::vector<int> sizes;
    for (const auto& part : split_on(expect_kv(toks[2], "sizes", reader.line_no), ',')) {
        sizes.push_back(static_cast<int>(parse_long(part, reader.line_no, 1)));
    }
    if (static_cast<long>(sizes.size()) != n) {
        throw ParseError("sizes= must list exactly n alphabet sizes", reader.line_no, 1);
    }

    std::optional<std::vector<std::vector<std::int64_t>>> integer_values;
    if (toks.size() == 4) {
        std::vector<std::vector<std::int64_t>> values;
        for (const auto& var_part : split_on(expect_kv(toks[3], "values", reader.line_no), ';')) {
            std::vector<std::int64_t> vs;
            for (const auto& v : split_on(var_part, ',')) {
                vs.push_back(parse_long(v, reader.line_no, 1));
            }
            values.push_back(std::move(vs));
        }
        if (static_cast<long>(values.size()) != n) {
            throw ParseError("values= must list one integer list per variable",
                             reader.line_no, 1);
        }
        integer_values = std::move(values);
    }

    std::size_t cells = 1;
    for (int k : sizes) cells *= static_cast<std::size_t>(k);
    std::vector<double> probs(cells, 0.0);
    std::vector<bool> seen(cells, false);

    while (reader.next(line)) {
        toks = split_ws(line);
        if (static_cast<long>(toks.size()) != n + 1) {
            throw ParseError("expected " + std::to_string(n) + " indices and a probability",
                             reader.line_no, 1);
        }
        std::size_t flat = 0;
        for (long v = 0; v < n; ++v) {
            const long idx = parse_long(toks[static_cast<std::size_t>(v)], reader.line_no,
                                        static_cast<int>(v) + 1);
            if (idx < 0 || idx >= sizes[static_cast<std::size_t>(v)]) {
                throw ParseError("index " + std::to_string(idx) + " out of range for variable " +
                                 std::to_string(v + 1),
                                 reader.line_no, static_cast<int>(v) + 1);
            }
            flat = flat * static_cast<std::size_t>(sizes[static_cast<std::size_t>(v)]) +
                   static_cast<std::size_t>(idx);
        }
        if (seen[flat]) throw ParseError("duplicate PMF cell", reader.line_no, 1);
        seen[flat] = true;
        probs[flat] = parse_double(toks[static_cast<std::size_t>(n)], reader.line_no,
                                   static_cast<int>(n) + 1);
    }

    try {
        return JointPmf(std::move(sizes), std::move(probs), std::move(integer_values));
    } catch (const DomainError& e) {
        throw ParseError(e.what(), reader.line_no, 1);
    }
}

std::string format_joint_pmf(const JointPmf& p) {
    std::ostringstream out;
    out << "pmf n=" << p.var_count() << " sizes=";
    for (int v = 0; v < p.var_count(); ++v) {
        if (v) out << ",";
        out << p.alphabet_sizes()[static_cast<std::size_t>(v)];
    }
    if (p.has_integer_values()) {
        out << " values=";
        for (int v = 0; v < p.var_count(); ++v) {
            if (v) out << ";";
            const auto& vs = p.integer_values()[static_cast<std::size_t>(v)];
            for (std::size_t a = 0; a < vs.size(); ++a) {
                if (a) out << ",";
                out << vs[a];
            }
        }
    }
    out << "\n";

    std::vector<int> idx(static_cast<std::size_t>(p.var_count()), 0);
    for (std::size_t flat = 0; flat < p.probs().size(); ++flat) {
        if (p.probs()[flat] != 0.0) {
            for (int v = 0; v < p.var_count(); ++v) {
                out << idx[static_cast<std::size_t>(v)] << " ";
            }
            out << double_repr(p.probs()[flat]) << "\n";
        }
        for (int v = p.var_count() - 1; v >= 0; --v) {
            if (++idx[static_cast<std::size_t>(v)] < p.alphabet_sizes()[static_cast<std::size_t>(v)]) break;
            idx[static_cast<std::size_t>(v)] = 0;
        }
    }
    return out.str();
}

CodeSet parse_code_set(std::istream& in, std::vector<std::string>* warnings) {
    LineReader reader{in};
    std::string line;
    std::vector<std::uint32_t> words;
    int n = 0;
    std::vector<bool> present;

    while (reader.next(line)) {
        auto toks = split_ws(line);
        if (toks.size() != 1) {
            throw ParseError("expected one code word per line", reader.line_no, 1);
        }
        const std::string& w = toks[0];
        if (n == 0) {
            n = static_cast<int>(w.size());
            if (n < 1 || n > max_codeset_dimension()) {
                throw ParseError("word length out of range", reader.line_no, 1);
            }
            present.assign(std::size_t{1} << n, false);
        } else if (static_cast<int>(w.size()) != n) {
            throw ParseError("word length " + std::to_string(w.size()) +
                             " does not match first word length " + std::to_string(n),
                             reader.line_no, 1);
        }
        std::uint32_t mask = 0;
        for (int c = 0; c < n; ++c) {
            const char ch = w[static_cast<std::size_t>(c)];
            if (ch == '+' || ch == '1') mask |= std::uint32_t{1} << c;
            else if (ch != '-' && ch != '0') {
                throw ParseError("code word characters must be one of + - 1 0",
                                 reader.line_no, c + 1);
            }
        }
        if (present[mask]) {
            if (warnings) {
                warnings->push_back("duplicate code word '" + w + "' at line " +
                                    std::to_string(reader.line_no) + " dropped");
            }
            continue;
        }
        present[mask] = true;
        words.push_back(mask);
    }
    if (words.empty()) throw ParseError("code set is empty", reader.line_no + 1, 1);
    return CodeSet(n, std::move(words));
}

std::string format_code_set(const CodeSet& A) {
    std::ostringstream out;
    for (std::uint32_t w : A.words()) {
        std::string s(static_cast<std::size_t>(A.dimension()), '-');
        for (int c = 0; c < A.dimension(); ++c) {
            if ((w >> c) & 1u) s[static_cast<std::size_t>(c)] = '+';
        }
        out << s << "\n";
    }
    return out.str();
}

std::vector<Point> parse_points(std::istream& in) {
    LineReader reader{in};
    std::string line;
    std::vector<Point> points;
    std::size_t arity = 0;
    while (reader.next(line)) {
        auto toks = split_ws(line);
        if (arity == 0) {
            arity = toks.size();
            if (arity == 0) continue;
        } else if (toks.size() != arity) {
            throw ParseError("point has " + std::to_string(toks.size()) +
                             " coordinates, expected " + std::to_string(arity),
                             reader.line_no, 1);
        }
        Point p;
        p.reserve(arity);
        for (std::size_t c = 0; c < toks.size(); ++c) {
            p.push_back(parse_long(toks[c], reader.line_no, static_cast<int>(c) + 1));
        }
        points.push_back(std::move(p));
    }
    if (points.empty()) throw ParseError("point set is empty", reader.line_no + 1, 1);
    return points;
}

std::string format_points(const std::vector<Point>& points) {
    std::ostringstream out;
    for (const auto& p : points) {
        for (std::size_t c = 0; c < p.size(); ++c) {
            if (c) out << " ";
            out << p[c];
        }
        out << "\n";
    }
    return out.str();
}

InputKind detect_input_kind(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line)) throw ParseError("empty input", 1, 1);
    const auto toks = split_ws(line);
    if (!toks.empty() && toks[0] == "setfn") return InputKind::set_function;
    if (!toks.empty() && toks[0] == "pmf") return InputKind::joint_pmf;
    if (toks.size() == 1) {
        const bool word_chars = toks[0].find_first_not_of("+-01") == std::string::npos;
        if (word_chars) return InputKind::code_set;
    }
    for (const auto& t : toks) {
        if (t.find_first_not_of("+-0123456789") != std::string::npos) {
            throw ParseError("cannot determine input format", reader.line_no, 1);
        }
    }
    return InputKind::points;
}

}  // namespace submodkit

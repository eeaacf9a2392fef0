#include <algorithm>
#include <charconv>
#include <map>

#include "frobtor/cli.hpp"
#include "frobtor/errors.hpp"

namespace frobtor::cli {

std::string_view to_string(Command c) noexcept {
    switch (c) {
        case Command::resolve: return "resolve";
        case Command::hk: return "hk";
        case Command::tor: return "tor";
        case Command::verdict: return "verdict";
        case Command::phantom: return "phantom";
        case Command::tcevidence: return "tcevidence";
        case Command::compare_req: return "compare-req";
        case Command::crosscheck: return "crosscheck";
    }
    return "hk";
}

std::optional<Command> command_from_string(std::string_view text) noexcept {
    for (auto c : {Command::resolve, Command::hk, Command::tor, Command::verdict, Command::phantom,
                   Command::tcevidence, Command::compare_req, Command::crosscheck})
        if (to_string(c) == text) return c;
    return std::nullopt;
}

std::size_t JobSpec::effective_length() const {
    if (length) return *length;
    if (command == Command::resolve) return 3;
    std::size_t top = 0;
    for (auto s : spots) top = std::max(top, s);
    return top + 1;
}

namespace {

struct Value {
    std::string text;
    int line;
    int column;  // of the first value character
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::pair<std::string_view, int>> split_commas(std::string_view text) {
    std::vector<std::pair<std::string_view, int>> out;
    if (trim(text).empty()) return out;
    std::size_t start = 0;
    for (;;) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        auto lead = piece.find_first_not_of(" \t");
        out.emplace_back(trim(piece), static_cast<int>(start + (lead == std::string_view::npos ? 0 : lead)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

[[noreturn]] void fail(const Value& v, const std::string& message, int offset = 0) {
    throw ParseError(message, v.line, v.column + offset);
}

template <class Int>
Int parse_integer(const Value& v, std::string_view piece, int offset, std::string_view what) {
    Int out{};
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), out);
    if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty())
        fail(v, std::string(what) + " must be a non-negative integer (got '" + std::string(piece) + "')", offset);
    return out;
}

std::vector<Polynomial> parse_polys(const RingPtr& ring, const Value& v) {
    std::vector<Polynomial> out;
    for (auto [piece, offset] : split_commas(v.text)) {
        if (piece.empty()) fail(v, "empty polynomial in list", offset);
        try {
            out.push_back(parse_polynomial(ring, piece));
        } catch (const ParseError& err) {
            fail(v, err.message(), offset + std::max(err.column(), 1) - 1);
        }
    }
    return out;
}

bool parse_bool(const Value& v) {
    if (v.text == "true" || v.text == "yes" || v.text == "1") return true;
    if (v.text == "false" || v.text == "no" || v.text == "0") return false;
    fail(v, "expected true or false (got '" + v.text + "')");
}

std::string join(const std::vector<Polynomial>& polys) {
    std::string out;
    for (std::size_t k = 0; k < polys.size(); ++k) out += (k ? ", " : "") + polys[k].to_string();
    return out;
}

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

}  // namespace

std::vector<std::size_t> parse_spot_list(std::string_view text) {
    Value v{std::string(text), 1, 1};
    std::vector<std::size_t> out;
    for (auto [piece, offset] : split_commas(text)) out.push_back(parse_integer<std::size_t>(v, piece, offset, "spot"));
    return out;
}

Polynomial parse_multiplier(const JobSpec& job, std::string_view text) {
    Value v{std::string(text), 1, 1};
    auto polys = parse_polys(job.descriptor, v);
    if (polys.size() != 1) throw ParseError("expected a single polynomial", 1, 1);
    return polys.front();
}

JobSpec parse_jobspec(std::string_view text) {
    static const std::vector<std::string> ring_keys{"p", "vars", "weights", "order", "ideal", "equidimensional"};
    static const std::vector<std::string> job_keys{"command", "spots", "emax", "length", "tol", "c", "req", "N", "W"};

    std::map<std::string, Value> ring, job;
    std::string section;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        auto hash = raw.find('#');
        std::string_view line = trim(hash == std::string_view::npos ? raw : raw.substr(0, hash));
        const int indent = static_cast<int>(raw.find_first_not_of(" \t") == std::string_view::npos
                                                ? 0
                                                : raw.find_first_not_of(" \t"));
        if (line.empty()) {
            if (end == text.size()) break;
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError("unterminated section header", line_no, indent + 1);
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (section != "ring" && section != "job")
                throw ParseError("unknown section '" + section + "'", line_no, indent + 2);
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line_no, indent + 1);
        if (section.empty()) throw ParseError("key outside of a section", line_no, indent + 1);
        std::string key(trim(line.substr(0, eq)));
        std::string_view rest = line.substr(eq + 1);
        const auto value_lead = rest.find_first_not_of(" \t");
        const int value_col = indent + static_cast<int>(eq) + 2 +
                              static_cast<int>(value_lead == std::string_view::npos ? 0 : value_lead);
        auto& keys = section == "ring" ? ring_keys : job_keys;
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw ParseError("unknown key '" + key + "' in [" + section + "]", line_no, indent + 1);
        auto& target = section == "ring" ? ring : job;
        if (target.count(key)) throw ParseError("duplicate key '" + key + "'", line_no, indent + 1);
        target[key] = Value{std::string(trim(rest)), line_no, value_col};
        if (end == text.size()) break;
    }

    auto require = [&](std::map<std::string, Value>& m, const std::string& key, const std::string& sec) -> Value& {
        auto it = m.find(key);
        if (it == m.end()) throw ParseError("missing key '" + key + "' in [" + sec + "]", line_no, 1);
        return it->second;
    };

    JobSpec spec;
    const Value& pv = require(ring, "p", "ring");
    const auto p = parse_integer<std::uint32_t>(pv, pv.text, 0, "p");
    const Value& vv = require(ring, "vars", "ring");
    std::vector<std::string> names;
    for (auto [piece, offset] : split_commas(vv.text)) {
        if (piece.empty()) fail(vv, "empty variable name", offset);
        names.emplace_back(piece);
    }
    std::vector<std::int32_t> weights;
    if (auto it = ring.find("weights"); it != ring.end())
        for (auto [piece, offset] : split_commas(it->second.text))
            weights.push_back(parse_integer<std::int32_t>(it->second, piece, offset, "weight"));
    MonomialOrder order = MonomialOrder::grevlex;
    if (auto it = ring.find("order"); it != ring.end()) {
        if (it->second.text == "lex")
            order = MonomialOrder::lex;
        else if (it->second.text != "grevlex")
            fail(it->second, "order must be grevlex or lex (got '" + it->second.text + "')");
    }
    try {
        spec.descriptor = RingDescriptor::make(p, names, weights, order);
    } catch (const Error& err) {
        const std::string_view msg = err.what();
        const Value* at = &vv;
        if (msg.find("prime") != std::string_view::npos)
            at = &pv;
        else if (msg.find("weight") != std::string_view::npos && ring.count("weights"))
            at = &ring.at("weights");
        fail(*at, err.what());
    }
    if (auto it = ring.find("ideal"); it != ring.end()) spec.ideal = parse_polys(spec.descriptor, it->second);
    if (auto it = ring.find("equidimensional"); it != ring.end()) spec.equidimensional = parse_bool(it->second);

    const Value& cv = require(job, "command", "job");
    auto cmd = command_from_string(cv.text);
    if (!cmd) fail(cv, "unknown command '" + cv.text + "'");
    spec.command = *cmd;
    if (auto it = job.find("spots"); it != job.end()) {
        spec.spots.clear();
        for (auto [piece, offset] : split_commas(it->second.text))
            spec.spots.push_back(parse_integer<std::size_t>(it->second, piece, offset, "spot"));
    }
    if (auto it = job.find("emax"); it != job.end()) spec.emax = parse_integer<unsigned>(it->second, it->second.text, 0, "emax");
    if (auto it = job.find("length"); it != job.end())
        spec.length = parse_integer<std::size_t>(it->second, it->second.text, 0, "length");
    if (auto it = job.find("tol"); it != job.end()) {
        const auto& t = it->second.text;
        double tol = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), tol);
        if (ec != std::errc() || ptr != t.data() + t.size() || !(tol > 0))
            fail(it->second, "tol must be a positive number (got '" + t + "')");
        spec.tol = tol;
    }
    if (auto it = job.find("c"); it != job.end()) {
        auto polys = parse_polys(spec.descriptor, it->second);
        if (polys.size() != 1) fail(it->second, "c must be a single polynomial");
        spec.c = polys.front();
    }
    if (auto it = job.find("req"); it != job.end()) spec.req = parse_polys(spec.descriptor, it->second);
    if (auto it = job.find("N"); it != job.end()) spec.N = parse_polys(spec.descriptor, it->second);
    if (auto it = job.find("W"); it != job.end()) spec.W = parse_polys(spec.descriptor, it->second);
    return spec;
}

std::string to_text(const JobSpec& job) {
    const auto& S = *job.descriptor;
    std::string out = "[ring]\n";
    out += "p = " + std::to_string(S.characteristic()) + "\n";
    out += "vars = ";
    for (std::size_t j = 0; j < S.nvars(); ++j) out += (j ? ", " : "") + S.names()[j];
    out += "\nweights = ";
    for (std::size_t j = 0; j < S.nvars(); ++j) out += (j ? ", " : "") + std::to_string(S.weights()[j]);
    out += "\norder = " + std::string(frobtor::to_string(S.order())) + "\n";
    out += "ideal = " + join(job.ideal) + "\n";
    out += std::string("equidimensional = ") + (job.equidimensional ? "true" : "false") + "\n";
    out += "\n[job]\n";
    out += "command = " + std::string(to_string(job.command)) + "\n";
    out += "spots = ";
    for (std::size_t k = 0; k < job.spots.size(); ++k) out += (k ? ", " : "") + std::to_string(job.spots[k]);
    out += "\nemax = " + std::to_string(job.emax) + "\n";
    out += "length = " + std::to_string(job.effective_length()) + "\n";
    out += "tol = " + format_double(job.tol) + "\n";
    if (job.c) out += "c = " + job.c->to_string() + "\n";
    if (!job.req.empty()) out += "req = " + join(job.req) + "\n";
    if (!job.N.empty()) out += "N = " + join(job.N) + "\n";
    if (!job.W.empty()) out += "W = " + join(job.W) + "\n";
    return out;
}

}  // namespace frobtor::cli

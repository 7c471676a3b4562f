#include "lmov/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lmov::braid {

BraidWord::BraidWord(int m, std::vector<int> ls) : strands(m), letters(std::move(ls)) {
    if (strands < 1) throw std::invalid_argument("BraidWord: need at least one strand");
    for (int l : letters)
        if (l == 0 || std::abs(l) >= strands)
            throw std::invalid_argument("BraidWord: letter out of range");
}

BraidWord BraidWord::parse(int strands, const std::string& word) {
    std::vector<int> letters;
    std::istringstream in(word);
    std::string tok;
    while (in >> tok) {
        bool neg = false;
        size_t i = 0;
        if (tok[i] == '-') {
            neg = true;
            ++i;
        }
        if (i < tok.size() && (tok[i] == 's' || tok[i] == 'S')) ++i;
        if (i >= tok.size()) throw std::invalid_argument("BraidWord::parse: bad token '" + tok + "'");
        int v = 0;
        for (; i < tok.size(); ++i) {
            if (!isdigit(static_cast<unsigned char>(tok[i])))
                throw std::invalid_argument("BraidWord::parse: bad token '" + tok + "'");
            v = v * 10 + (tok[i] - '0');
        }
        if (v == 0) throw std::invalid_argument("BraidWord::parse: generator index 0");
        letters.push_back(neg ? -v : v);
    }
    return BraidWord(strands, std::move(letters));
}

std::string BraidWord::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) os << ' ';
        os << (letters[i] < 0 ? "-s" : "s") << std::abs(letters[i]);
    }
    return os.str();
}

int BraidWord::exponent_sum() const {
    int e = 0;
    for (int l : letters) e += (l > 0) ? 1 : -1;
    return e;
}

BraidWord BraidWord::free_reduced() const {
    std::vector<int> stack;
    for (int l : letters) {
        if (!stack.empty() && stack.back() == -l)
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return BraidWord(strands, std::move(stack));
}

ClosureInfo analyze_closure(const BraidWord& b) {
    int m = b.strands;
    std::vector<int> occ(m);
    std::iota(occ.begin(), occ.end(), 0);
    struct Crossing {
        int a, b, sign;
    };
    std::vector<Crossing> crossings;
    crossings.reserve(b.letters.size());
    for (int l : b.letters) {
        int p = std::abs(l) - 1;
        crossings.push_back({occ[p], occ[p + 1], l > 0 ? 1 : -1});
        std::swap(occ[p], occ[p + 1]);
    }

    // Strand i re-enters the bottom at the position where it exits the top.
    std::vector<int> next(m);
    for (int pos = 0; pos < m; ++pos) next[occ[pos]] = pos;

    ClosureInfo info;
    info.component_of.assign(m, -1);
    for (int i = 0; i < m; ++i) {
        if (info.component_of[i] != -1) continue;
        int comp = info.components++;
        int count = 0;
        for (int j = i; info.component_of[j] == -1; j = next[j]) {
            info.component_of[j] = comp;
            ++count;
        }
        info.strand_count.push_back(count);
    }
    info.writhe.assign(info.components, 0);
    std::vector<std::vector<int>> mixed(info.components, std::vector<int>(info.components, 0));
    for (const auto& c : crossings) {
        int ca = info.component_of[c.a], cb = info.component_of[c.b];
        if (ca == cb) {
            info.writhe[ca] += c.sign;
        } else {
            mixed[ca][cb] += c.sign;
            mixed[cb][ca] += c.sign;
        }
    }
    info.linking.assign(info.components, std::vector<int>(info.components, 0));
    for (int a = 0; a < info.components; ++a)
        for (int c = 0; c < info.components; ++c) {
            if (a == c) continue;
            if (mixed[a][c] % 2 != 0)
                throw std::logic_error("analyze_closure: odd mixed crossing count");
            info.linking[a][c] = mixed[a][c] / 2;
        }
    return info;
}

BraidWord cable(const BraidWord& b, const std::vector<int>& widths) {
    if (static_cast<int>(widths.size()) != b.strands)
        throw std::invalid_argument("cable: one width per strand required");
    for (int w : widths)
        if (w < 0) throw std::invalid_argument("cable: negative width");
    int total = std::accumulate(widths.begin(), widths.end(), 0);
    std::vector<int> occ(b.strands);
    std::iota(occ.begin(), occ.end(), 0);
    std::vector<int> out;
    for (int l : b.letters) {
        int p = std::abs(l) - 1;
        int wa = widths[occ[p]], wb = widths[occ[p + 1]];
        int off = 0;
        for (int k = 0; k < p; ++k) off += widths[occ[k]];
        if (l > 0) {
            for (int r = wa; r >= 1; --r)
                for (int s = 0; s < wb; ++s) out.push_back(off + r + s);
        } else {
            for (int r = 1; r <= wa; ++r)
                for (int s = wb - 1; s >= 0; --s) out.push_back(-(off + r + s));
        }
        std::swap(occ[p], occ[p + 1]);
    }
    return BraidWord(std::max(total, 1), std::move(out));
}

std::vector<int> cable_offsets(const BraidWord& b, const std::vector<int>& widths) {
    if (static_cast<int>(widths.size()) != b.strands)
        throw std::invalid_argument("cable_offsets: one width per strand required");
    std::vector<int> off(b.strands);
    int acc = 1;
    for (int i = 0; i < b.strands; ++i) {
        off[i] = acc;
        acc += widths[i];
    }
    return off;
}

std::vector<int> full_twist_word(int offset, int n) {
    std::vector<int> w;
    if (n <= 1) return w;
    for (int rep = 0; rep < n; ++rep)
        for (int i = 0; i < n - 1; ++i) w.push_back(offset + i);
    return w;
}

namespace {

BraidWord torus_braid(int a, int basis) {
    if (a < 1 || basis < 0) throw std::invalid_argument("torus braid: bad parameters");
    std::vector<int> word;
    for (int rep = 0; rep < basis; ++rep)
        for (int i = 1; i < a; ++i) word.push_back(i);
    return BraidWord(a, std::move(word));
}

}  // namespace

Link lookup_link(const std::string& spec) {
    std::string s;
    for (char c : spec)
        if (!isspace(static_cast<unsigned char>(c))) s += static_cast<char>(tolower(c));
    if (s == "unknot") return {"unknot", BraidWord(1, {})};
    if (s == "unlink2") return {"unlink2", BraidWord(2, {})};
    if (s == "hopf") return {"hopf", BraidWord(2, {1, 1})};
    if (s == "trefoil") return {"trefoil", BraidWord(2, {1, 1, 1})};
    auto paren = s.find('(');
    if ((s.rfind("torus", 0) == 0 || s.rfind("t(", 0) == 0) && paren != std::string::npos &&
        s.back() == ')') {
        std::string args = s.substr(paren + 1, s.size() - paren - 2);
        auto comma = args.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("lookup_link: expected torus(a,b)");
        int a = std::stoi(args.substr(0, comma));
        int bb = std::stoi(args.substr(comma + 1));
        return {"torus(" + std::to_string(a) + "," + std::to_string(bb) + ")",
                torus_braid(a, bb)};
    }
    if (s.rfind("braid:", 0) == 0) {
        auto rest = spec.substr(spec.find(':') + 1);
        auto second = rest.find(':');
        if (second == std::string::npos)
            throw std::invalid_argument("lookup_link: expected braid:<strands>:<word>");
        int m = std::stoi(rest.substr(0, second));
        return {"braid", BraidWord::parse(m, rest.substr(second + 1))};
    }
    throw std::invalid_argument("lookup_link: unknown link '" + spec + "'");
}

}  // namespace lmov::braid

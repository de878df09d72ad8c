#include "rgate/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "rgate/errors.hpp"

namespace rgate {

Word free_reduce(Word w) {
    Word out;
    out.reserve(w.size());
    for (int letter : w) {
        if (letter == 0) throw precondition_violated("word letter 0 is not valid");
        if (!out.empty() && out.back() == -letter)
            out.pop_back();
        else
            out.push_back(letter);
    }
    return out;
}

Word word_inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

Word word_concat(const Word& u, const Word& v) {
    Word out = u;
    out.insert(out.end(), v.begin(), v.end());
    return free_reduce(std::move(out));
}

int GroupPresentation::find_generator(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == name) return static_cast<int>(i);
    return -1;
}

void GroupPresentation::normalize() {
    const int g = generator_count();
    for (Word& r : relators) {
        for (int letter : r) {
            const int idx = std::abs(letter) - 1;
            if (letter == 0 || idx >= g)
                throw precondition_violated("relator references an unknown generator");
        }
        r = free_reduce(std::move(r));
    }
}

std::vector<std::vector<long long>> GroupPresentation::abelianized_columns() const {
    std::vector<std::vector<long long>> cols(relators.size(),
                                             std::vector<long long>(generators.size(), 0));
    for (std::size_t j = 0; j < relators.size(); ++j)
        for (int letter : relators[j]) {
            const int idx = std::abs(letter) - 1;
            cols[j][idx] += letter > 0 ? 1 : -1;
        }
    return cols;
}

std::string GroupPresentation::word_to_string(const Word& w) const {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << letter_to_string(*this, w[i]);
    return os.str();
}

GroupPresentation free_product(const GroupPresentation& a, const GroupPresentation& b) {
    GroupPresentation p;
    p.generators = a.generators;
    p.generators.insert(p.generators.end(), b.generators.begin(), b.generators.end());
    p.relators = a.relators;
    const int shift = a.generator_count();
    for (const Word& r : b.relators) {
        Word w;
        w.reserve(r.size());
        for (int letter : r) w.push_back(letter > 0 ? letter + shift : letter - shift);
        p.relators.push_back(std::move(w));
    }
    return p;
}

int parse_letter(const GroupPresentation& p, const std::string& s) {
    bool inverse = false;
    std::string name = s;
    if (name.size() > 3 && name.compare(name.size() - 3, 3, "^-1") == 0) {
        inverse = true;
        name = name.substr(0, name.size() - 3);
    }
    const int idx = p.find_generator(name);
    if (idx < 0) throw parse_error("unknown generator in word: " + s);
    return inverse ? -(idx + 1) : idx + 1;
}

std::string letter_to_string(const GroupPresentation& p, int letter) {
    const int idx = std::abs(letter) - 1;
    return letter > 0 ? p.generators[idx] : p.generators[idx] + "^-1";
}

}  // namespace rgate

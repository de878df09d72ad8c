#pragma once

#include <string>
#include <vector>

namespace rgate {

// A letter is a nonzero int: +(i+1) is generator i, -(i+1) its inverse.
using Word = std::vector<int>;

Word free_reduce(Word w);
Word word_inverse(const Word& w);
Word word_concat(const Word& u, const Word& v);

// Finitely presented group: generator names plus freely reduced relators.
struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    int generator_count() const { return static_cast<int>(generators.size()); }
    int relator_count() const { return static_cast<int>(relators.size()); }

    // Letter index of a named generator, or -1.
    int find_generator(const std::string& name) const;

    // Validates letter ranges and reduces every relator.
    void normalize();

    // Commutator-quotient presentation matrix: rows are generators, columns
    // are relators with signed letter counts.
    std::vector<std::vector<long long>> abelianized_columns() const;

    std::string word_to_string(const Word& w) const;
};

// Free product: disjoint union of generators and relators.
GroupPresentation free_product(const GroupPresentation& a, const GroupPresentation& b);

// "x1" / "x1^-1" letter syntax used by the JSON schemas.
int parse_letter(const GroupPresentation& p, const std::string& s);
std::string letter_to_string(const GroupPresentation& p, int letter);

}  // namespace rgate

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace renorm {

/// A primitive divergence: a graph without subdivergences.
///
/// `loops` is the loop order (and the weight j used by the toy models);
/// `degree` is 0 for a logarithmic letter and 1 for a linearly divergent one.
struct Letter {
    std::string name;
    int loops = 1;
    int degree = 0;

    bool operator==(const Letter &) const = default;
};

/// Registry of letters keyed by name.
///
/// An open alphabet accepts any syntactically valid name and hands out the
/// default letter (loops 1, degree 0) for names it has not been told about.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Letter> letters);

    /// Alphabet with no declared letters that accepts every name.
    static Alphabet open();
    /// The single default letter `x1`.
    static Alphabet standard();

    void add(Letter letter);
    std::optional<Letter> resolve(std::string_view name) const;
    bool contains(std::string_view name) const { return letters_.count(std::string(name)) != 0; }
    bool isOpen() const { return open_; }
    bool empty() const { return letters_.empty(); }
    std::vector<Letter> letters() const;

private:
    std::map<std::string, Letter, std::less<>> letters_;
    bool open_ = false;
};

/// Irreducible parenthesized word: an unordered rooted tree with a letter at
/// every node. Children are kept sorted by their canonical rendering, so two
/// structurally equal trees have identical representations.
class Ipw {
public:
    explicit Ipw(Letter root, std::vector<Ipw> children = {});

    const Letter &root() const { return root_; }
    const std::vector<Ipw> &children() const { return children_; }
    /// Canonical text, e.g. "((x1)(x2)x3)".
    const std::string &key() const { return key_; }

    std::size_t length() const { return length_; }
    int depth() const { return depth_; }
    int loopOrder() const { return loops_; }
    bool isPrimitive() const { return children_.empty(); }
    bool isStrictlyNested() const { return static_cast<std::size_t>(depth_) == length_; }
    int maxDegree() const;

    friend bool operator==(const Ipw &a, const Ipw &b) { return a.key_ == b.key_; }
    friend bool operator<(const Ipw &a, const Ipw &b) { return a.key_ < b.key_; }

private:
    Letter root_;
    std::vector<Ipw> children_;
    std::string key_;
    std::size_t length_ = 1;
    int depth_ = 1;
    int loops_ = 0;
};

/// A parenthesized word: commutative product of irreducible words.
/// The empty product is the unit e = "()".
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Ipw> factors);
    Word(Ipw single);

    const std::vector<Ipw> &factors() const { return factors_; }
    bool isUnit() const { return factors_.empty(); }
    bool isIrreducible() const { return factors_.size() == 1; }

    std::string render() const;
    std::size_t length() const;
    int loopOrder() const;
    /// Maximum depth over the factors, 0 for the unit.
    int depth() const;

    friend Word operator*(const Word &a, const Word &b);
    friend bool operator==(const Word &a, const Word &b) { return a.factors_ == b.factors_; }
    friend bool operator<(const Word &a, const Word &b) { return a.render() < b.render(); }

private:
    std::vector<Ipw> factors_;
};

/// Parse failure with the 0-based column of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string &what, std::size_t column)
        : std::runtime_error(what + " at column " + std::to_string(column)), column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

bool isValidLetterName(std::string_view name);

Word parseWord(std::string_view text, const Alphabet &alphabet);
/// Parses text that must consist of exactly one irreducible word.
Ipw parseIpw(std::string_view text, const Alphabet &alphabet);
std::string renderWord(const Word &w);

std::size_t length(const Word &w);
int depth(const Ipw &t);
int loopOrder(const Word &w);

/// One way of splitting an iPW t into a product of subtrees u and the
/// quotient t/u obtained by deleting those subtrees. `multiplicity` counts
/// the distinct antichains of nodes that produce the same canonical pair.
struct SubwordSplit {
    Word sub;
    Word quotient;
    int multiplicity = 1;
};

/// All splits of t over antichains of proper subtrees, plus the two improper
/// splits (e, t) and (t, e). Sorted by (sub, quotient) rendering.
std::vector<SubwordSplit> subwordDecompositions(const Ipw &t);

/// Only the splits over non-empty antichains of proper subtrees.
std::vector<SubwordSplit> properSubwordDecompositions(const Ipw &t);

/// Every canonical iPW with exactly k letters drawn from `letters`,
/// sorted by canonical rendering.
std::vector<Ipw> enumerateIpws(std::size_t k, const std::vector<Letter> &letters);
/// Single-letter variant over x1.
std::vector<Ipw> enumerateIpws(std::size_t k);
/// Every word (product of iPWs, unit excluded) with exactly k letters.
std::vector<Word> enumerateWords(std::size_t k, const std::vector<Letter> &letters);
/// Words of every length 1..maxLength.
std::vector<Word> enumerateWordsUpTo(std::size_t maxLength, const std::vector<Letter> &letters);

/// Graphviz rendering of a word as a forest of rooted trees.
std::string toDot(const Word &w);

} // namespace renorm

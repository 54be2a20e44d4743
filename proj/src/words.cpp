#include "renorm/words.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <utility>

namespace renorm {

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::vector<Letter> letters) {
    for (auto &l : letters)
        add(std::move(l));
}

Alphabet Alphabet::open() {
    Alphabet a;
    a.open_ = true;
    return a;
}

Alphabet Alphabet::standard() { return Alphabet({Letter{"x1", 1, 0}}); }

void Alphabet::add(Letter letter) {
    if (!isValidLetterName(letter.name))
        throw std::invalid_argument("invalid letter name '" + letter.name + "'");
    if (letter.loops < 1)
        throw std::invalid_argument("letter '" + letter.name + "' must have loop order >= 1");
    if (letter.degree != 0 && letter.degree != 1)
        throw std::invalid_argument("letter '" + letter.name + "' must have divergence degree 0 or 1");
    if (letters_.count(letter.name))
        throw std::invalid_argument("duplicate letter '" + letter.name + "'");
    auto name = letter.name;
    letters_.emplace(std::move(name), std::move(letter));
}

std::optional<Letter> Alphabet::resolve(std::string_view name) const {
    if (auto it = letters_.find(name); it != letters_.end())
        return it->second;
    if (open_ && isValidLetterName(name))
        return Letter{std::string(name), 1, 0};
    return std::nullopt;
}

std::vector<Letter> Alphabet::letters() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (const auto &[_, l] : letters_)
        out.push_back(l);
    return out;
}

bool isValidLetterName(std::string_view name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front())))
        return false;
    return std::all_of(name.begin(), name.end(), [](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
    });
}

// ---------------------------------------------------------------------------
// Ipw / Word

Ipw::Ipw(Letter root, std::vector<Ipw> children) : root_(std::move(root)), children_(std::move(children)) {
    std::sort(children_.begin(), children_.end());
    key_ = "(";
    int maxChildDepth = 0;
    loops_ = root_.loops;
    for (const auto &c : children_) {
        key_ += c.key_;
        length_ += c.length_;
        loops_ += c.loops_;
        maxChildDepth = std::max(maxChildDepth, c.depth_);
    }
    key_ += root_.name;
    key_ += ')';
    depth_ = 1 + maxChildDepth;
}

int Ipw::maxDegree() const {
    int d = root_.degree;
    for (const auto &c : children_)
        d = std::max(d, c.maxDegree());
    return d;
}

Word::Word(std::vector<Ipw> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
}

Word::Word(Ipw single) { factors_.push_back(std::move(single)); }

std::string Word::render() const {
    if (factors_.empty())
        return "()";
    std::string s;
    for (const auto &f : factors_)
        s += f.key();
    return s;
}

std::size_t Word::length() const {
    std::size_t n = 0;
    for (const auto &f : factors_)
        n += f.length();
    return n;
}

int Word::loopOrder() const {
    int n = 0;
    for (const auto &f : factors_)
        n += f.loopOrder();
    return n;
}

int Word::depth() const {
    int d = 0;
    for (const auto &f : factors_)
        d = std::max(d, f.depth());
    return d;
}

Word operator*(const Word &a, const Word &b) {
    std::vector<Ipw> all = a.factors_;
    all.insert(all.end(), b.factors_.begin(), b.factors_.end());
    return Word(std::move(all));
}

std::string renderWord(const Word &w) { return w.render(); }
std::size_t length(const Word &w) { return w.length(); }
int depth(const Ipw &t) { return t.depth(); }
int loopOrder(const Word &w) { return w.loopOrder(); }

// ---------------------------------------------------------------------------
// Parser
//
//   word   := '(' ')'            (the unit, only as the whole input)
//           | ipw+
//   ipw    := '(' ipw* letter ')'
//   letter := [a-zA-Z][a-zA-Z0-9_]*

namespace {

class WordParser {
public:
    WordParser(std::string_view text, const Alphabet &alphabet) : text_(text), alphabet_(alphabet) {}

    Word parseWord() {
        skipSpace();
        if (isUnitLiteral())
            return Word{};
        std::vector<Ipw> factors;
        if (atEnd())
            throw ParseError("empty input", pos_);
        while (!atEnd()) {
            factors.push_back(parseIpw());
            skipSpace();
        }
        return Word(std::move(factors));
    }

private:
    bool atEnd() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skipSpace() {
        while (!atEnd() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    bool isUnitLiteral() {
        std::size_t p = pos_;
        if (p >= text_.size() || text_[p] != '(')
            return false;
        ++p;
        while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p])))
            ++p;
        if (p >= text_.size() || text_[p] != ')')
            return false;
        ++p;
        std::size_t close = p - 1;
        while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p])))
            ++p;
        if (p != text_.size())
            throw ParseError("empty bracket pair", close);
        pos_ = p;
        return true;
    }

    Ipw parseIpw() {
        if (peek() == ')')
            throw ParseError("unbalanced bracket", pos_);
        if (peek() != '(')
            throw ParseError(std::isalpha(static_cast<unsigned char>(peek())) ? "letter outside brackets"
                                                                                : "unexpected character",
                             pos_);
        ++pos_;
        std::vector<Ipw> children;
        for (;;) {
            skipSpace();
            if (atEnd())
                throw ParseError("unbalanced bracket", pos_);
            if (peek() == '(') {
                children.push_back(parseIpw());
                continue;
            }
            if (peek() == ')')
                throw ParseError(children.empty() ? "empty bracket pair" : "missing letter before closing bracket",
                                 pos_);
            break;
        }
        if (!std::isalpha(static_cast<unsigned char>(peek())))
            throw ParseError("unexpected character", pos_);
        const std::size_t nameStart = pos_;
        while (!atEnd() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            ++pos_;
        std::string_view name = text_.substr(nameStart, pos_ - nameStart);
        auto letter = alphabet_.resolve(name);
        if (!letter)
            throw ParseError("unknown letter '" + std::string(name) + "'", nameStart);
        skipSpace();
        if (atEnd())
            throw ParseError("unbalanced bracket", pos_);
        if (peek() != ')')
            throw ParseError("letter '" + std::string(name) + "' must be followed by a closing bracket", pos_);
        ++pos_;
        return Ipw(std::move(*letter), std::move(children));
    }

    std::string_view text_;
    const Alphabet &alphabet_;
    std::size_t pos_ = 0;
};

} // namespace

Word parseWord(std::string_view text, const Alphabet &alphabet) { return WordParser(text, alphabet).parseWord(); }

Ipw parseIpw(std::string_view text, const Alphabet &alphabet) {
    Word w = parseWord(text, alphabet);
    if (!w.isIrreducible())
        throw ParseError("expected a single irreducible word", 0);
    return w.factors().front();
}

// ---------------------------------------------------------------------------
// Subword decompositions

namespace {

// A partial choice inside one subtree: the subtrees picked so far and what is
// left of the subtree (nothing if it was picked as a whole).
struct Choice {
    std::vector<Ipw> picked;
    std::optional<Ipw> rest;
};

std::vector<Choice> choicesBelow(const Ipw &node, bool mayPickWhole);

// Cartesian product over the children of `node`, keeping node itself.
std::vector<Choice> combineChildren(const Ipw &node) {
    std::vector<Choice> acc{Choice{{}, std::nullopt}};
    std::vector<std::vector<Ipw>> keptChildren{{}};
    for (const auto &child : node.children()) {
        auto options = choicesBelow(child, true);
        std::vector<Choice> next;
        std::vector<std::vector<Ipw>> nextKept;
        for (std::size_t i = 0; i < acc.size(); ++i) {
            for (const auto &opt : options) {
                Choice c = acc[i];
                c.picked.insert(c.picked.end(), opt.picked.begin(), opt.picked.end());
                auto kept = keptChildren[i];
                if (opt.rest)
                    kept.push_back(*opt.rest);
                next.push_back(std::move(c));
                nextKept.push_back(std::move(kept));
            }
        }
        acc = std::move(next);
        keptChildren = std::move(nextKept);
    }
    for (std::size_t i = 0; i < acc.size(); ++i)
        acc[i].rest = Ipw(node.root(), std::move(keptChildren[i]));
    return acc;
}

std::vector<Choice> choicesBelow(const Ipw &node, bool mayPickWhole) {
    auto out = combineChildren(node);
    if (mayPickWhole)
        out.push_back(Choice{{node}, std::nullopt});
    return out;
}

std::vector<SubwordSplit> collect(const Ipw &t, bool includeImproper) {
    std::map<std::pair<std::string, std::string>, SubwordSplit> merged;
    auto addSplit = [&](Word sub, Word quotient) {
        auto key = std::make_pair(sub.render(), quotient.render());
        auto it = merged.find(key);
        if (it == merged.end())
            merged.emplace(std::move(key), SubwordSplit{std::move(sub), std::move(quotient), 1});
        else
            ++it->second.multiplicity;
    };
    for (auto &c : combineChildren(t)) {
        if (c.picked.empty())
            continue;
        addSplit(Word(std::move(c.picked)), Word(*c.rest));
    }
    if (includeImproper) {
        addSplit(Word{}, Word(t));
        addSplit(Word(t), Word{});
    }
    std::vector<SubwordSplit> out;
    out.reserve(merged.size());
    for (auto &[_, s] : merged)
        out.push_back(std::move(s));
    return out;
}

} // namespace

std::vector<SubwordSplit> subwordDecompositions(const Ipw &t) { return collect(t, true); }
std::vector<SubwordSplit> properSubwordDecompositions(const Ipw &t) { return collect(t, false); }

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Trees of every size 1..maxSize, ordered by (size, key). Forests are drawn
// as non-increasing index sequences into this pool so each multiset appears
// once.
class TreePool {
public:
    explicit TreePool(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    void growTo(std::size_t maxSize) {
        while (bySize_.size() < maxSize) {
            const std::size_t k = bySize_.size() + 1;
            std::vector<Ipw> trees;
            for (const auto &forest : forests(k - 1, pool_.size()))
                for (const auto &root : letters_)
                    trees.emplace_back(root, forest);
            std::sort(trees.begin(), trees.end());
            trees.erase(std::unique(trees.begin(), trees.end()), trees.end());
            bySize_.push_back(trees);
            pool_.insert(pool_.end(), trees.begin(), trees.end());
        }
    }

    const std::vector<Ipw> &ofSize(std::size_t k) const { return bySize_.at(k - 1); }

    // Multisets of pool trees with total size m, using indices < limit.
    std::vector<std::vector<Ipw>> forests(std::size_t m, std::size_t limit) const {
        std::vector<std::vector<Ipw>> out;
        std::vector<Ipw> current;
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t remaining, std::size_t lim) {
            if (remaining == 0) {
                out.push_back(current);
                return;
            }
            for (std::size_t i = lim; i-- > 0;) {
                if (pool_[i].length() > remaining)
                    continue;
                current.push_back(pool_[i]);
                rec(remaining - pool_[i].length(), i + 1);
                current.pop_back();
            }
        };
        rec(m, limit);
        return out;
    }

    std::size_t poolSize() const { return pool_.size(); }

private:
    std::vector<Letter> letters_;
    std::vector<std::vector<Ipw>> bySize_;
    std::vector<Ipw> pool_;
};

} // namespace

std::vector<Ipw> enumerateIpws(std::size_t k, const std::vector<Letter> &letters) {
    if (k == 0 || letters.empty())
        return {};
    TreePool pool(letters);
    pool.growTo(k);
    return pool.ofSize(k);
}

std::vector<Ipw> enumerateIpws(std::size_t k) { return enumerateIpws(k, {Letter{"x", 1, 0}}); }

std::vector<Word> enumerateWords(std::size_t k, const std::vector<Letter> &letters) {
    if (k == 0 || letters.empty())
        return {};
    TreePool pool(letters);
    pool.growTo(k);
    std::vector<Word> out;
    for (auto &f : pool.forests(k, pool.poolSize()))
        out.emplace_back(std::move(f));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> enumerateWordsUpTo(std::size_t maxLength, const std::vector<Letter> &letters) {
    std::vector<Word> out;
    for (std::size_t k = 1; k <= maxLength; ++k) {
        auto words = enumerateWords(k, letters);
        out.insert(out.end(), words.begin(), words.end());
    }
    return out;
}

// ---------------------------------------------------------------------------

std::string toDot(const Word &w) {
    std::ostringstream os;
    os << "digraph word {\n  node [shape=box];\n";
    int next = 0;
    std::function<int(const Ipw &)> emit = [&](const Ipw &t) {
        const int id = next++;
        os << "  n" << id << " [label=\"" << t.root().name << "\"];\n";
        for (const auto &c : t.children()) {
            const int cid = emit(c);
            os << "  n" << id << " -> n" << cid << ";\n";
        }
        return id;
    };
    if (w.isUnit())
        os << "  e [label=\"e\", shape=plaintext];\n";
    for (const auto &f : w.factors())
        emit(f);
    os << "}\n";
    return os.str();
}

} // namespace renorm

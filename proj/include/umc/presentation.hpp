#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "umc/errors.hpp"
#include "umc/word.hpp"

namespace umc {

struct Generator {
    std::string display;
};

enum class Confluence { verified, unresolved };

// A monoid by generators and length-non-increasing rewrite rules. Values are
// immutable once built; construction orients the relations and runs the
// critical-pair check, so downstream code can rely on unique normal forms
// whenever status() == verified.
class Presentation {
public:
    Presentation() { index_rules(); status_ = Confluence::verified; }

    static Presentation make(std::vector<Generator> gens,
                             std::vector<std::pair<Word, Word>> relations) {
        Presentation p;
        p.gens_ = std::move(gens);
        for (auto& [a, b] : relations) p.add_oriented(a, b);
        p.dedupe_rules();
        p.index_rules();
        p.run_confluence_check();
        return p;
    }

    const std::vector<Generator>& generators() const { return gens_; }
    int gen_count() const { return (int)gens_.size(); }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    Confluence status() const { return status_; }
    const std::vector<std::pair<Word, Word>>& unresolved_pairs() const { return unresolved_; }

    void check_word(const Word& w) const {
        for (GenId g : w.letters)
            if (g < 0 || g >= gen_count())
                throw UnknownGenerator("letter " + std::to_string(g) + " not declared");
    }

    // Exhaustive leftmost rewriting; the result does not depend on strategy
    // when the system is confluent, which normalize() requires.
    Word normalize(const Word& w) const {
        check_word(w);
        if (status_ != Confluence::verified)
            throw NotConfluent("presentation has unresolved critical pairs");
        return reduce(w);
    }

    // Rewriting with no confluence requirement; used internally by the
    // critical-pair check itself.
    Word reduce(Word w) const {
        if (rules_.empty()) return w;
        size_t pos = 0;
        while (pos < w.letters.size()) {
            bool fired = false;
            for (int ri : rules_by_first_[w.letters[pos]]) {
                const RewriteRule& r = rules_[ri];
                const size_t L = r.lhs.size();
                if (pos + L > w.letters.size()) continue;
                if (!std::equal(r.lhs.letters.begin(), r.lhs.letters.end(),
                                w.letters.begin() + pos))
                    continue;
                std::vector<GenId> next;
                next.reserve(w.letters.size() - L + r.rhs.size());
                next.insert(next.end(), w.letters.begin(), w.letters.begin() + pos);
                next.insert(next.end(), r.rhs.letters.begin(), r.rhs.letters.end());
                next.insert(next.end(), w.letters.begin() + pos + L, w.letters.end());
                w.letters = std::move(next);
                pos = pos >= max_lhs_ ? pos - max_lhs_ + 1 : 0;
                fired = true;
                break;
            }
            if (!fired) ++pos;
        }
        return w;
    }

    bool is_normal(const Word& w) const {
        for (size_t pos = 0; pos < w.letters.size(); ++pos)
            for (int ri : rules_by_first_[w.letters[pos]]) {
                const RewriteRule& r = rules_[ri];
                if (pos + r.lhs.size() > w.letters.size()) continue;
                if (std::equal(r.lhs.letters.begin(), r.lhs.letters.end(),
                               w.letters.begin() + pos))
                    return false;
            }
        return true;
    }

    // All critical pairs whose two reducts have distinct normal forms.
    std::vector<std::pair<Word, Word>> critical_pairs() const {
        std::set<std::pair<Word, Word>> bad;
        const int R = (int)rules_.size();
        for (int i = 0; i < R; ++i) {
            const Word &li = rules_[i].lhs, &ri = rules_[i].rhs;
            for (int j = 0; j < R; ++j) {
                const Word &lj = rules_[j].lhs, &rj = rules_[j].rhs;
                // suffix of li overlaps prefix of lj
                const size_t tmax = std::min(li.size(), lj.size());
                for (size_t t = 1; t <= tmax; ++t) {
                    if (i == j && t == li.size()) continue;  // trivial self overlap
                    if (!std::equal(lj.letters.begin(), lj.letters.begin() + t,
                                    li.letters.end() - t))
                        continue;
                    Word u(std::vector<GenId>(li.letters.begin(), li.letters.end() - t));
                    Word v(std::vector<GenId>(lj.letters.begin() + t, lj.letters.end()));
                    record_pair(bad, reduce(ri * v), reduce(u * rj));
                }
                // lj strictly inside li
                if (lj.size() < li.size()) {
                    for (size_t s = 0; s + lj.size() <= li.size(); ++s) {
                        if (!std::equal(lj.letters.begin(), lj.letters.end(),
                                        li.letters.begin() + s))
                            continue;
                        std::vector<GenId> mid(li.letters.begin(), li.letters.begin() + s);
                        mid.insert(mid.end(), rj.letters.begin(), rj.letters.end());
                        mid.insert(mid.end(), li.letters.begin() + s + lj.size(),
                                   li.letters.end());
                        record_pair(bad, reduce(ri), reduce(Word(std::move(mid))));
                    }
                }
            }
        }
        return {bad.begin(), bad.end()};
    }

    std::string show(const Word& w, const std::string& sep = "") const {
        if (w.empty()) return "1";
        std::string s;
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) s += sep;
            s += gens_[w.letters[i]].display;
        }
        return s;
    }

private:
    void add_oriented(Word a, Word b) {
        if (a == b) return;
        if (a < b) std::swap(a, b);
        rules_.push_back(RewriteRule{std::move(a), std::move(b)});
    }
    void dedupe_rules() {
        std::sort(rules_.begin(), rules_.end(), [](const RewriteRule& x, const RewriteRule& y) {
            if (x.lhs == y.lhs) return x.rhs < y.rhs;
            return x.lhs < y.lhs;
        });
        rules_.erase(std::unique(rules_.begin(), rules_.end()), rules_.end());
    }
    void index_rules() {
        rules_by_first_.assign(gens_.size(), {});
        max_lhs_ = 1;
        for (int i = 0; i < (int)rules_.size(); ++i) {
            rules_by_first_[rules_[i].lhs.letters.at(0)].push_back(i);
            max_lhs_ = std::max(max_lhs_, rules_[i].lhs.size());
        }
    }
    void run_confluence_check() {
        unresolved_ = critical_pairs();
        status_ = unresolved_.empty() ? Confluence::verified : Confluence::unresolved;
    }
    static void record_pair(std::set<std::pair<Word, Word>>& bad, Word a, Word b) {
        if (a == b) return;
        if (b < a) std::swap(a, b);
        bad.emplace(std::move(a), std::move(b));
    }

    std::vector<Generator> gens_;
    std::vector<RewriteRule> rules_;
    std::vector<std::vector<int>> rules_by_first_;
    size_t max_lhs_ = 1;
    Confluence status_ = Confluence::verified;
    std::vector<std::pair<Word, Word>> unresolved_;
};

inline Presentation free_monoid(std::vector<Generator> gens) {
    return Presentation::make(std::move(gens), {});
}

// Reduced free monoid on a pointed set: the basepoint generator is deleted.
inline Presentation reduced_free_monoid(std::vector<Generator> gens, int basepoint) {
    if (basepoint < 0 || basepoint >= (int)gens.size())
        throw NoBasepoint("reduced_free_monoid needs a basepoint in range");
    gens.erase(gens.begin() + basepoint);
    return Presentation::make(std::move(gens), {});
}

// Disjoint union of generators and rules. Factor tags keep displays unique.
inline Presentation free_product(const std::vector<Presentation>& ps) {
    std::vector<Generator> gens;
    std::vector<std::pair<Word, Word>> rels;
    int off = 0;
    for (size_t f = 0; f < ps.size(); ++f) {
        const Presentation& p = ps[f];
        for (const Generator& g : p.generators()) {
            Generator h = g;
            if (ps.size() > 1) h.display += "#" + std::to_string(f);
            gens.push_back(std::move(h));
        }
        for (const RewriteRule& r : p.rules()) {
            Word a = r.lhs, b = r.rhs;
            for (GenId& x : a.letters) x += off;
            for (GenId& x : b.letters) x += off;
            rels.emplace_back(std::move(a), std::move(b));
        }
        off += p.gen_count();
    }
    return Presentation::make(std::move(gens), std::move(rels));
}

// All normal forms of length <= k. Normal forms are closed under subwords,
// so extension by one letter plus a suffix check enumerates them exactly.
inline std::vector<Word> ball(const Presentation& p, int k) {
    if (p.status() != Confluence::verified)
        throw NotConfluent("ball needs a confluent presentation");
    std::vector<Word> out{Word::one()};
    size_t lo = 0;
    for (int len = 1; len <= k; ++len) {
        size_t hi = out.size();
        for (size_t i = lo; i < hi; ++i) {
            for (GenId g = 0; g < p.gen_count(); ++g) {
                Word w = out[i];
                w.letters.push_back(g);
                bool reducible = false;
                for (const RewriteRule& r : p.rules()) {
                    if (r.lhs.size() > w.size()) continue;
                    if (std::equal(r.lhs.letters.begin(), r.lhs.letters.end(),
                                   w.letters.end() - r.lhs.size())) {
                        reducible = true;
                        break;
                    }
                }
                if (!reducible) out.push_back(std::move(w));
            }
        }
        if (out.size() == hi) break;  // no longer normal forms exist
        lo = hi;
    }
    return out;
}

// Letterwise extension of a generator assignment.
inline Word map_word(const Word& w, const std::vector<Word>& gmap) {
    Word out;
    for (GenId g : w.letters) {
        const Word& im = gmap.at(g);
        out.letters.insert(out.letters.end(), im.letters.begin(), im.letters.end());
    }
    return out;
}

// Necessary-and-ball-exact isomorphism check: the generator map must preserve
// every relation (else IllDefinedMap) and restrict to a bijection between the
// radius-k balls after normalization.
inline bool ball_isomorphic(const Presentation& p, const Presentation& q,
                            const std::vector<Word>& gmap, int k) {
    if ((int)gmap.size() != p.gen_count())
        throw IllDefinedMap("generator map has wrong arity");
    for (const Word& im : gmap) q.check_word(im);
    for (const RewriteRule& r : p.rules())
        if (q.normalize(map_word(r.lhs, gmap)) != q.normalize(map_word(r.rhs, gmap)))
            throw IllDefinedMap("relation not preserved: " + p.show(r.lhs) + " -> " +
                                p.show(r.rhs));

    std::vector<Word> bp = ball(p, k), bq = ball(q, k);
    std::set<Word> image;
    for (const Word& w : bp) {
        Word v = q.normalize(map_word(w, gmap));
        if ((int)v.size() > k) return false;  // leaves the target ball
        if (!image.insert(v).second) return false;  // not injective
    }
    return image.size() == bq.size();
}

}  // namespace umc

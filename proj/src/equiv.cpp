#include "cazac/equiv.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

namespace cazac {

std::string Transform::name() const {
    switch (kind) {
        case Kind::Translate: return "T" + std::to_string(param);
        case Kind::Modulate: return "M" + std::to_string(param);
        case Kind::Decimate: return "D" + std::to_string(param);
        case Kind::Conjugate: return "C";
    }
    return "?";
}

ComplexSeq apply(const Transform& t, const ComplexSeq& x) {
    const int n = x.size();
    std::vector<Complex> out(static_cast<std::size_t>(n));
    switch (t.kind) {
        case Transform::Kind::Translate:
            for (int j = 0; j < n; ++j) {
                out[static_cast<std::size_t>(j)] = x.at_mod(j + t.param);
            }
            break;
        case Transform::Kind::Modulate: {
            long long l = t.param % n;
            if (l < 0) l += n;
            for (long long j = 0; j < n; ++j) {
                const long long r = (l * j) % n;
                out[static_cast<std::size_t>(j)] =
                    std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / n) *
                    x[static_cast<int>(j)];
            }
            break;
        }
        case Transform::Kind::Decimate: {
            long long m = t.param % n;
            if (m < 0) m += n;
            if (std::gcd(m, static_cast<long long>(n)) != 1) {
                throw BadDecimation(t.param, n);
            }
            for (long long j = 0; j < n; ++j) {
                out[static_cast<std::size_t>(j)] = x.at_mod(m * j);
            }
            break;
        }
        case Transform::Kind::Conjugate:
            for (int j = 0; j < n; ++j) {
                out[static_cast<std::size_t>(j)] = std::conj(x[j]);
            }
            break;
    }
    return ComplexSeq(std::move(out));
}

namespace {

std::vector<Transform> all_single_transforms(int n) {
    std::vector<Transform> ts;
    for (int k = 1; k < n; ++k) ts.push_back(Transform::translate(k));
    for (int l = 1; l < n; ++l) ts.push_back(Transform::modulate(l));
    for (int m = 2; m < n; ++m) {
        if (std::gcd(m, n) == 1) ts.push_back(Transform::decimate(m));
    }
    ts.push_back(Transform::conjugate());
    return ts;
}

}  // namespace

OrbitReport orbit(const ComplexSeq& x, int max_word_len) {
    if (max_word_len < 1) throw std::invalid_argument("orbit requires max_word_len >= 1");
    const int n = x.size();
    const std::vector<Transform> transforms = all_single_transforms(n);

    struct Member {
        ComplexSeq seq;
        std::string word;
    };
    std::map<CanonicalKey, Member> seen;
    const ComplexSeq base = canonicalize(x);
    seen.emplace(key_of(base), Member{base, ""});

    std::vector<ComplexSeq> frontier{base};
    std::vector<std::string> frontier_words{""};
    for (int depth = 0; depth < max_word_len && !frontier.empty(); ++depth) {
        std::vector<ComplexSeq> next;
        std::vector<std::string> next_words;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            for (const Transform& t : transforms) {
                ComplexSeq y = canonicalize(apply(t, frontier[i]));
                CanonicalKey key = key_of(y);
                if (seen.contains(key)) continue;
                std::string word = frontier_words[i].empty()
                                       ? t.name()
                                       : t.name() + "." + frontier_words[i];
                seen.emplace(std::move(key), Member{y, word});
                next.push_back(std::move(y));
                next_words.push_back(std::move(word));
            }
        }
        frontier = std::move(next);
        frontier_words = std::move(next_words);
    }

    OrbitReport report{base, {}, {}, {}};
    report.keys.reserve(seen.size());
    report.members.reserve(seen.size());
    report.words.reserve(seen.size());
    for (auto& [key, member] : seen) {
        report.keys.push_back(key);
        report.members.push_back(std::move(member.seq));
        report.words.push_back(std::move(member.word));
    }
    return report;
}

std::vector<ComplexSeq> dedupe(const std::vector<ComplexSeq>& xs) {
    std::map<CanonicalKey, ComplexSeq> by_key;
    for (const ComplexSeq& x : xs) {
        ComplexSeq rep = canonicalize(x);
        CanonicalKey key = key_of(rep);
        by_key.emplace(std::move(key), std::move(rep));  // first occurrence wins
    }
    std::vector<ComplexSeq> out;
    out.reserve(by_key.size());
    for (auto& [key, rep] : by_key) {
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace cazac

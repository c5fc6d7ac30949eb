#include "sumset/families.hpp"

#include <algorithm>
#include <sstream>

#include "sumset/error.hpp"
#include "sumset/modular.hpp"
#include "sumset/sumset.hpp"

namespace sumset {

namespace {

/// Values in [0, b] that are not in S, ascending.
std::vector<Integer> gaps(const FiniteIntegerSet& S) {
    std::vector<Integer> out;
    std::size_t i = 0;
    for (Integer x = 0; x <= S.b(); ++x) {
        if (i < S.size() && S[i] == x) {
            ++i;
        } else {
            out.push_back(x);
        }
    }
    return out;
}

bool in_sumset(const FiniteIntegerSet& S, Integer N, Integer n) {
    if (N < 1) return n == 0;
    return n_fold_sumset(S, N).contains(n);
}

/// S = {0,1} u [lo, b] plus possibly `extra` low elements.
bool is_tail_from(const FiniteIntegerSet& S, std::span<const Integer> head, Integer lo) {
    const Integer b = S.b();
    if (lo > b) return false;
    if (S.size() != head.size() + static_cast<std::size_t>(b - lo + 1)) return false;
    for (std::size_t i = 0; i < head.size(); ++i) {
        if (S[i] != head[i]) return false;
    }
    for (std::size_t i = head.size(); i < S.size(); ++i) {
        if (S[i] != lo + static_cast<Integer>(i - head.size())) return false;
    }
    return true;
}

void recognize(const FiniteIntegerSet& S, int delta, bool reflected, std::vector<FamilyLabel>& out) {
    const Integer b = S.b();
    const std::vector<Integer> missing = gaps(S);
    auto emit = [&](FamilyKind kind, std::map<std::string, Integer> params) {
        out.push_back({kind, std::move(params), reflected});
    };

    if (missing.size() == 1 && missing[0] >= 2 && missing[0] <= b - 2) emit(FamilyKind::F1, {{"a", missing[0]}});

    // F2: gaps are exactly [2, a].
    if (!missing.empty() && missing.front() == 2 && S.contains(1)) {
        const Integer a = missing.back();
        const bool contiguous = static_cast<Integer>(missing.size()) == a - 1;
        if (contiguous && a <= b - 2 && !in_sumset(S, a - 1, a)) emit(FamilyKind::F2, {{"a", a}});
    }

    if (delta < 2) return;

    // G1: gaps are [2, a] u {d} with d >= a + 2.
    if (missing.size() >= 2 && missing.front() == 2 && S.contains(1)) {
        const Integer d = missing.back();
        const Integer a = missing[missing.size() - 2];
        const bool contiguous = static_cast<Integer>(missing.size()) - 1 == a - 1;
        if (contiguous && a <= b - 2 && d >= a + 2 && d <= b - 1 && !in_sumset(S, a - 1, a)) {
            emit(FamilyKind::G1, {{"a", a}, {"d", d}});
        }
    }

    if (missing.size() == 2 && missing[0] >= 2 && missing[1] <= b - 2 && !S.contains(missing[0])) {
        emit(FamilyKind::G2, {{"a", missing[0]}, {"c", missing[1]}});
    }

    constexpr Integer g3_head[] = {0, 1, 2};
    constexpr Integer g4_head[] = {0, 1, 3};
    if (is_tail_from(S, g3_head, 6) && !in_sumset(S, 2, 5)) emit(FamilyKind::G3, {});
    if (is_tail_from(S, g4_head, 6) && !in_sumset(S, 2, 5)) emit(FamilyKind::G4, {});
}

}  // namespace

const char* to_string(FamilyKind kind) noexcept {
    switch (kind) {
        case FamilyKind::F1: return "F1";
        case FamilyKind::F2: return "F2";
        case FamilyKind::G1: return "G1";
        case FamilyKind::G2: return "G2";
        case FamilyKind::G3: return "G3";
        case FamilyKind::G4: return "G4";
        case FamilyKind::A1: return "A1";
        case FamilyKind::A2: return "A2";
        case FamilyKind::A3: return "A3";
        case FamilyKind::A4: return "A4";
        case FamilyKind::A5: return "A5";
        case FamilyKind::A6: return "A6";
    }
    return "?";
}

std::string FamilyLabel::to_string() const {
    std::ostringstream os;
    if (reflected) os << "b-A:";
    os << sumset::to_string(kind);
    if (!parameters.empty()) {
        os << '(';
        bool first = true;
        for (const auto& [name, value] : parameters) {
            if (!first) os << ' ';
            os << name << '=' << value;
            first = false;
        }
        os << ')';
    }
    return os.str();
}

std::vector<FamilyLabel> classify_exceptional_family(const FiniteIntegerSet& A, int delta) {
    require_normalized(A, "classify_exceptional_family");
    if (delta != 1 && delta != 2) throw InvalidArgument("classify_exceptional_family: delta must be 1 or 2");
    std::vector<FamilyLabel> out;
    recognize(A, delta, false, out);
    const FiniteIntegerSet mirror = reflect(A);
    if (mirror != A) recognize(mirror, delta, true, out);
    return out;
}

std::vector<AppendixMatch> appendix_families(const FiniteIntegerSet& A) {
    std::vector<AppendixMatch> out;
    const Integer b = A.b();
    for (const DoublingFamilyMatch& m : small_doubling_shapes(A)) {
        switch (m.family) {
            case DoublingFamily::K1: out.push_back({{FamilyKind::A1, {{"a", m.h}}, false}, 1}); break;
            case DoublingFamily::K2: out.push_back({{FamilyKind::A2, {{"a", m.h}}, false}, 1}); break;
            case DoublingFamily::K4: out.push_back({{FamilyKind::A3, {{"h", m.h}}, false}, 1}); break;
            case DoublingFamily::K3: out.push_back({{FamilyKind::A4, {{"h", m.h}}, false}, b - 1 - m.h}); break;
            case DoublingFamily::K5: out.push_back({{FamilyKind::A5, {{"a", m.h}}, false}, b / 2}); break;
            case DoublingFamily::K6: out.push_back({{FamilyKind::A6, {{"a", m.h}}, false}, b / 2 - 1}); break;
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const AppendixMatch& x, const AppendixMatch& y) {
        return static_cast<int>(x.label.kind) < static_cast<int>(y.label.kind);
    });
    return out;
}

std::optional<AppendixMatch> appendix_family_threshold(const FiniteIntegerSet& A) {
    auto all = appendix_families(A);
    if (all.empty()) return std::nullopt;
    return all.front();
}

}  // namespace sumset

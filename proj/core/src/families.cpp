#include "sextic/families.hpp"

#include <array>
#include <utility>

namespace sextic {

namespace {

struct NameEntry {
    FamilyName name;
    const char* text;
    int params;
};

constexpr std::array<NameEntry, 17> kNames{{{FamilyName::Ramanujan, "R", 0},
                                             {FamilyName::Narayanan, "N", 1},
                                             {FamilyName::F, "F", 1},
                                             {FamilyName::P1, "p1", 1},
                                             {FamilyName::P2, "p2", 1},
                                             {FamilyName::P3, "p3", 1},
                                             {FamilyName::A, "A", 1},
                                             {FamilyName::B, "B", 1},
                                             {FamilyName::Q1, "Q1", 0},
                                             {FamilyName::Q2, "Q2", 0},
                                             {FamilyName::Naren, "Naren", 1},
                                             {FamilyName::Young, "Young", 0},
                                             {FamilyName::YoungN, "YoungN", 1},
                                             {FamilyName::Hirschhorn, "Hirschhorn", 0},
                                             {FamilyName::HirschhornN, "HirschhornN", 1},
                                             {FamilyName::Sandor, "Sandor", 4},
                                             {FamilyName::Vieta, "Vieta", 0}}};

const NameEntry& entry(FamilyName name) {
    for (const auto& e : kNames) {
        if (e.name == name) return e;
    }
    throw std::logic_error("unknown family enumerator");
}

}  // namespace

FamilyName parse_family_name(std::string_view text) {
    for (const auto& e : kNames) {
        if (text == e.text) return e.name;
    }
    std::string known;
    for (const auto& e : kNames) {
        if (!known.empty()) known += ", ";
        known += e.text;
    }
    throw std::invalid_argument("unknown family '" + std::string(text) + "' (known: " + known + ")");
}

std::string family_name_string(FamilyName name) { return entry(name).text; }

int family_param_count(FamilyName name) { return entry(name).params; }

}  // namespace sextic

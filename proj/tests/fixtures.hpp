#pragma once

#include "gtpoly/io.hpp"

#include <string>

namespace testing_fixtures {

inline const gtpoly::io::Json& examples() {
    static const gtpoly::io::Json j = gtpoly::io::read_file(std::string(GTPOLY_FIXTURES) + "/worked_examples.json");
    return j;
}

inline gtpoly::GTPattern pattern(const gtpoly::io::Json& j) { return gtpoly::io::pattern_from_json(j); }
inline gtpoly::SkewTableau tableau(const gtpoly::io::Json& j) { return gtpoly::io::tableau_from_json(j); }
inline gtpoly::SkewShape shape(const gtpoly::io::Json& j) { return gtpoly::io::shape_from_json(j); }
inline gtpoly::Composition composition(const gtpoly::io::Json& j) {
    return gtpoly::Composition(gtpoly::io::ints_from_json(j));
}

}  // namespace testing_fixtures

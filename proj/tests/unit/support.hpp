#pragma once

#include "doctest.h"

#include "qordkit/cyclotomic.hpp"

namespace doctest {

template <>
struct StringMaker<qordkit::Cyclotomic> {
    static String convert(const qordkit::Cyclotomic& c) { return c.to_string().c_str(); }
};

template <>
struct StringMaker<qordkit::Integer> {
    static String convert(const qordkit::Integer& z) { return z.get_str().c_str(); }
};

} // namespace doctest

#pragma once

#include "logtoric/integers.hpp"

// Small vector builders so test assertions avoid brace-lists inside
// assertion macros (commas in braces split macro arguments).
inline logtoric::IntVec v2(long a, long b) { return logtoric::IntVec{a, b}; }
inline logtoric::IntVec v3(long a, long b, long c) { return logtoric::IntVec{a, b, c}; }
inline logtoric::IntVec v4(long a, long b, long c, long d) {
    return logtoric::IntVec{a, b, c, d};
}

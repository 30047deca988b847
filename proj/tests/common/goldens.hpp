#pragma once

// Inputs and expected outputs shared by the unit tests and the acceptance run.

namespace mgb::golden {

inline constexpr const char* kStrictInclusion = "ring QQ[x,y,z] degrevlex; ideal(x + 2z, x + 2y);";
inline constexpr const char* kRadNeeded = "ring QQ[x,y,z] degrevlex; ideal(2x - y, 2y - z);";
inline constexpr const char* kGFandGZ = "ring QQ[x,y] degrevlex; ideal(x^2*y - 7/2*y, x*y^2 - 3/5*x);";
inline constexpr const char* kDeltone3 = "ring QQ[x,y,z] degrevlex; ideal(x^2 - y, x*y + z + 1, z^2 + x);";
inline constexpr const char* kManyBadPrimes =
    "ring QQ[x,y,z] degrevlex; ideal(x^2*y + 7x*y^2 - 2, y^3 + x^2*z, z^3 + x^2 - y);";
inline constexpr const char* kBadPrimeDetection =
    "ring QQ[x,y,z,w,s,t] elim(x,y,z,w);\n"
    "ideal(x - t^3, y - (s*t^2 - 2s^2), z - (s^2*t - 5), w - (s^3 - 7t));";

// Tuples under elim(s,t) of the reductions modulo 2, 3, 5, 7.
inline constexpr const char* kDetect2 =
    "[y^2, z^5, y*z^4, y*t, y*s, x*t, x*s, z^3*t, z^3*s, t^2, z*s*t, z*s^2, s^2*t, s^3]";
inline constexpr const char* kDetect3 =
    "[z^5, y*z^4, y^2*z^3, y^3*z^2, x*y^2*z^2, y^4*z, x*y^3*z, y^5, x*y^4, y^4*w^2, x*z^3*w^3, "
    "x*z^4*w^2, x*y*z^3*w^2, x^2*z^3*w^2, x^2*z^4*w, x^2*y*z^3*w, x^3*z^3*w, z*s, y*s, x*s, z^2*t, "
    "y*z*t, x*z*t, y^2*t, x*y*t, x^2*t, w^3*t, w^3*s, z*w^2*t, y*w^2*t, x*w^2*t, t^2, s*t, s^2]";
inline constexpr const char* kDetect5 =
    "[z^5, y*z^4, y^2*z^3, y^3*z^2, x*y^2*z^2, y^4*z, x*y^3*z, y^5, x*y^4, y^4*w^2, y^2*z^2*w^3, "
    "x*z^4*w^2, x*y*z^3*w^2, x^2*z^3*w^2, x^2*z^4*w, x^2*y*z^3*w, x^3*z^3*w, z*s, y*s, x*s, z^2*t, "
    "y*z*t, x*z*t, y^2*t, x*y*t, x^2*t, w^3*t, w^3*s, z*w^2*t, y*w^2*t, x*w^2*t, t^2, s*t, s^2]";
inline constexpr const char* kDetect7 =
    "[z^3, y^2*z^2, y^3*z, y^4, z*s, y*s, x*s, w^2*t, w^2*s, z*w*t, z^2*t, y*z*t, y^2*t, w*t^2, "
    "w*s*t, w*s^2, t^3, s*t^2, s^2*t, s^3]";

// Lex tuples of the degrevlex reductions of the many-bad-primes ideal.
inline constexpr const char* kManyDrl = "[z^3, y^3, x^2*y, x^4*z, x^6]";
inline constexpr const char* kManyLex2 = "[z^17, y*z, y^3, x*z^6, x*y^2, x^2]";
inline constexpr const char* kManyLex7 = "[z^13, y, x^2]";
inline constexpr const char* kManyLex11 = "[z^25, y*z, y^2, x]";
inline constexpr const char* kManyLexGood = "[z^26, y, x]";

}  // namespace mgb::golden

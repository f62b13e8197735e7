#pragma once

// Theory texts shared by unit and acceptance tests.
namespace catcom::test {

inline constexpr const char* kMonoid =
    "theory monoid { op mul:2; op e:0;"
    " eq mul(x1,mul(x2,x3)) = mul(mul(x1,x2),x3);"
    " eq mul(e(),x1) = x1; eq mul(x1,e()) = x1; }";

inline constexpr const char* kSemilattice =
    "theory sl { op join:2; eq join(x1,x1)=x1; eq join(x1,x2)=join(x2,x1);"
    " eq join(join(x1,x2),x3)=join(x1,join(x2,x3)); }";

inline constexpr const char* kPointed = "theory pointed { op c:0; }";

inline constexpr const char* kEmpty = "theory empty { }";

inline constexpr const char* kGroup =
    "theory grp { op mul:2; op inv:1; op e:0;"
    " eq mul(x1,mul(x2,x3)) = mul(mul(x1,x2),x3);"
    " eq mul(e(),x1) = x1; eq mul(x1,e()) = x1;"
    " eq mul(inv(x1),x1) = e(); eq mul(x1,inv(x1)) = e(); }";

}  // namespace catcom::test

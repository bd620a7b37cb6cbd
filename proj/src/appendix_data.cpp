#include "appendix_data.hpp"

#include "error.hpp"

namespace vt {

namespace {

const std::vector<const char*> kListingA = {
    "3>2<3>2<3>2<3>2<3>2<3",
    "3>2<3>2<3>2<3>2<21>2<3",
    "3>2<3>2<3>2<21>2<3>2<3",
    "3>2<3>2<3>2<21>2<21>2<3",
    "3>2<3>2<3>2<21>11<21>2<3",
    "3>2<3>2<21>2<3>2<3>2<3",
    "3>2<3>2<21>2<3>2<21>2<3",
    "3>2<3>2<21>2<21>2<3>2<3",
    "3>2<3>2<21>2<21>2<21>2<3",
    "3>2<3>2<21>2<21>11<21>2<3",
    "3>2<3>2<21>11<21>2<3>2<3",
    "3>2<3>2<21>11<21>2<21>2<3",
    "3>2<3>2<21>11<21>11<21>2<3",
    "3>2<21>2<3>2<3>2<3>2<3",
    "3>2<21>2<3>2<3>2<21>2<3",
    "3>2<21>2<3>2<21>2<3>2<3",
    "3>2<21>2<3>2<21>2<21>2<3",
    "3>2<21>2<3>2<21>11<21>2<3",
    "3>2<21>2<21>2<3>2<3>2<3",
    "3>2<21>2<21>2<3>2<21>2<3",
    "3>2<21>2<21>2<21>2<3>2<3",
    "3>2<21>2<21>2<21>2<21>2<3",
    "3>2<21>2<21>2<21>11<21>2<3",
    "3>2<21>2<21>11<21>2<3>2<3",
    "3>2<21>2<21>11<21>2<21>2<3",
    "3>2<21>2<21>11<21>11<21>2<3",
    "3>2<21>11<21>2<3>2<3>2<3",
    "3>2<21>11<21>2<3>2<21>2<3",
    "3>2<21>11<21>2<21>2<3>2<3",
    "3>2<21>11<21>2<21>2<21>2<3",
    "3>2<21>11<21>2<21>11<21>2<3",
    "3>2<21>11<21>11<21>2<3>2<3",
    "3>2<21>11<21>11<21>2<21>2<3",
    "3>2<21>11<21>11<21>11<21>2<3",
    "3>2<3>2<21>11<111>11<21>2<3",
    "3>2<21>2<21>11<111>11<21>2<3",
    "3>2<21>11<111>11<21>2<3>2<3",
    "3>2<21>11<111>11<21>2<21>2<3",
    "3>2<21>11<111>11<21>11<21>2<3",
    "3>2<21>11<21>11<111>11<21>2<3",
    "3>2<21>11<111>11<111>11<21>2<3",
};

const std::vector<const char*> kListingB = {
    "3>2<3>2<3>2<3>2<21>11<111",
    "3>2<3>2<3>2<21>2<21>11<111",
    "3>2<3>2<3>2<21>11<21>11<111",
    "3>2<3>2<21>2<3>2<21>11<111",
    "3>2<3>2<21>2<21>2<21>11<111",
    "3>2<3>2<21>2<21>11<21>11<111",
    "3>2<3>2<21>11<21>2<21>11<111",
    "3>2<3>2<21>11<21>11<21>11<111",
    "3>2<21>2<3>2<3>2<21>11<111",
    "3>2<21>2<3>2<21>2<21>11<111",
    "3>2<21>2<3>2<21>11<21>11<111",
    "3>2<21>2<21>2<3>2<21>11<111",
    "3>2<21>2<21>2<21>2<21>11<111",
    "3>2<21>2<21>2<21>11<21>11<111",
    "3>2<21>2<21>11<21>2<21>11<111",
    "3>2<21>2<21>11<21>11<21>11<111",
    "3>2<21>11<21>2<3>2<21>11<111",
    "3>2<21>11<21>2<21>2<21>11<111",
    "3>2<21>11<21>2<21>11<21>11<111",
    "3>2<21>11<21>11<21>2<21>11<111",
    "3>2<21>11<21>11<21>11<21>11<111",
    "3>2<3>2<21>11<111>11<21>11<111",
    "3>2<21>2<21>11<111>11<21>11<111",
    "3>2<21>11<111>11<21>2<21>11<111",
    "3>2<21>11<111>11<21>11<21>11<111",
    "3>2<21>11<21>11<111>11<21>11<111",
    "3>2<21>11<111>11<111>11<21>11<111",
    "3>2<3>2<3>2<21>11<111>11<111",
    "3>2<3>2<21>2<21>11<111>11<111",
    "3>2<3>2<21>11<21>11<111>11<111",
    "3>2<21>2<3>2<21>11<111>11<111",
    "3>2<21>2<21>2<21>11<111>11<111",
    "3>2<21>2<21>11<21>11<111>11<111",
    "3>2<21>11<21>2<21>11<111>11<111",
    "3>2<21>11<21>11<21>11<111>11<111",
    "3>2<3>2<21>11<111>11<111>11<111",
    "3>2<21>2<21>11<111>11<111>11<111",
    "3>2<21>11<111>11<21>11<111>11<111",
    "3>2<21>11<21>11<111>11<111>11<111",
    "3>2<21>11<111>11<111>11<111>11<111",
};

const std::vector<const char*> kListingC = {
    "21>2<21>2<21>2<21",
    "21>2<21>2<21>11<21",
    "21>2<21>11<21>2<21",
    "21>11<21>2<21>2<21",
    "21>2<21>11<21>11<21",
    "21>11<21>11<21>2<21",
    "21>11<21>2<21>11<21",
    "21>11<21>11<21>11<21",
    "21>2<3>2<21>2<21",
    "21>2<21>2<3>2<21",
    "21>2<3>2<3>2<21",
    "21>2<3>2<21>11<21",
    "21>11<21>2<3>2<21",
    "21>2<21>11<111>11<21",
    "21>11<111>11<21>2<21",
    "21>11<111>11<21>11<21",
    "21>11<21>11<111>11<21",
    "21>11<111>11<111>11<21",
};

}  // namespace

const std::vector<const char*>& appendix_listing(char which) {
    switch (which) {
        case 'A': return kListingA;
        case 'B': return kListingB;
        case 'C': return kListingC;
    }
    raise(errc::bad_params, "appendix must be A, B, or C");
}

}  // namespace vt

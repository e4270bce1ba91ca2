#include "ppa/instrument.hpp"

namespace ppa::instrument {

Counter& bit_images() {
    static Counter c;
    return c;
}

Counter& grey_images() {
    static Counter c;
    return c;
}

}  // namespace ppa::instrument

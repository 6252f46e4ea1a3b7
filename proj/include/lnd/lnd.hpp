#ifndef LND_LND_HPP
#define LND_LND_HPP

#include "lnd/derivation.hpp"
#include "lnd/errors.hpp"
#include "lnd/groebner.hpp"
#include "lnd/io.hpp"
#include "lnd/kernel.hpp"
#include "lnd/laurent.hpp"
#include "lnd/paperlab.hpp"
#include "lnd/parse.hpp"
#include "lnd/polynomial.hpp"
#include "lnd/rational.hpp"
#include "lnd/ring.hpp"

#endif  // LND_LND_HPP

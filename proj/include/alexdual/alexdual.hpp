#pragma once

// Exact reduced/relative/co- homology of finite simplicial complexes and the
// Alexander duality verifier. Everything is header-only; include this or the
// individual headers.

#include "alexdual/chain_complex.hpp"
#include "alexdual/duality.hpp"
#include "alexdual/face.hpp"
#include "alexdual/io.hpp"
#include "alexdual/matrix.hpp"
#include "alexdual/ring.hpp"
#include "alexdual/simplicial_complex.hpp"
#include "alexdual/smith.hpp"

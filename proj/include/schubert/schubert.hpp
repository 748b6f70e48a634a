#pragma once

#include "schubert/coeff_ring.hpp"
#include "schubert/derivation.hpp"
#include "schubert/exterior.hpp"
#include "schubert/presentation.hpp"
#include "schubert/schubert_ring.hpp"
#include "schubert/schur.hpp"
#include "schubert/serialize.hpp"

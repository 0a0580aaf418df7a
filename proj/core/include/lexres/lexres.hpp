#pragma once

#include "lexres/decomposition.hpp"
#include "lexres/errors.hpp"
#include "lexres/io.hpp"
#include "lexres/lexsegment.hpp"
#include "lexres/monomial.hpp"
#include "lexres/powers.hpp"
#include "lexres/quotients.hpp"
#include "lexres/resolution.hpp"
#include "lexres/verify.hpp"

#pragma once

#include "ptchain/core_model.hpp"
#include "ptchain/domain_mapper.hpp"
#include "ptchain/errors.hpp"
#include "ptchain/hypothesis_verifier.hpp"
#include "ptchain/leading_order.hpp"
#include "ptchain/polynomial.hpp"
#include "ptchain/rational.hpp"
#include "ptchain/root_finder.hpp"
#include "ptchain/secular.hpp"
#include "ptchain/spectrum.hpp"
#include "ptchain/truncated_series.hpp"

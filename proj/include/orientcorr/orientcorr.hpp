#pragma once

#include "orientcorr/classifier.hpp"
#include "orientcorr/closed_form.hpp"
#include "orientcorr/dyadic.hpp"
#include "orientcorr/enumerate.hpp"
#include "orientcorr/errors.hpp"
#include "orientcorr/graph.hpp"
#include "orientcorr/kn_exact.hpp"
#include "orientcorr/monte_carlo.hpp"

#pragma once

#include <gsc/rational.hpp>
#include <gsc/number_theory.hpp>
#include <gsc/sequence.hpp>
#include <gsc/seqcore.hpp>
#include <gsc/analysis.hpp>
#include <gsc/planner.hpp>
#include <gsc/equivalence.hpp>
#include <gsc/io.hpp>
#include <gsc/experiments.hpp>

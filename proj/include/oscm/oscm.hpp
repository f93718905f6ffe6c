#pragma once

#include "oscm/analysis.hpp"
#include "oscm/bigraph.hpp"
#include "oscm/dc.hpp"
#include "oscm/dp.hpp"
#include "oscm/error.hpp"
#include "oscm/extensions.hpp"
#include "oscm/generate.hpp"
#include "oscm/instance_io.hpp"
#include "oscm/ledger.hpp"
#include "oscm/oracle.hpp"
#include "oscm/qdc.hpp"
#include "oscm/qdp.hpp"
#include "oscm/qmf.hpp"
#include "oscm/solve.hpp"
#include "oscm/subset.hpp"

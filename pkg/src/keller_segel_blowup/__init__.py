# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

__version__ = "0.1.0"

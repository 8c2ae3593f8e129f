# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

from setuptools import find_packages, setup

setup(
    name="keller_segel_blowup",
    version="0.1.0",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    package_data={"": ["py.typed", "cards/*.yaml"]},
    description="Radial Keller-Segel blow-up laboratory -- mass-coordinate solver and moment diagnostics",
    long_description=open("README.md", encoding="utf-8").read(),
    long_description_content_type="text/markdown",
    readme="README.md",
    python_requires=">=3.8",
    license="MIT",
    install_requires=[
        "numpy",
        "pandas",
        "pyyaml",
        "scipy",
        "tqdm",
    ],
    entry_points={
        "console_scripts": [
            "ks_lab=keller_segel_blowup.cli.main:main",
            "ks_check=keller_segel_blowup.cli.check:main",
            "ks_simulate=keller_segel_blowup.cli.simulate:main",
            "ks_diagnose=keller_segel_blowup.cli.diagnose:main",
            "ks_sweep=keller_segel_blowup.cli.sweep:main",
            "ks_refine=keller_segel_blowup.cli.refine:main",
        ],
    },
    include_package_data=True,
)

from setuptools import setup

install_requires = [
    "dynaconf",
    "jinja2",
    "numpy",
    "scipy",
    "tqdm",
]

setup(
    install_requires=install_requires,
)

from setuptools import setup, find_packages

setup(
    name='gaussharmonic',
    version='1.0',
    packages=find_packages(exclude=('tests', 'docs')),
    include_package_data=True,
    exclude_package_data={'': ['*.json']},
    install_requires=[
        'gmpy2~=2.1.5',
        'numpy~=1.24.4',
        'pandas~=2.0.3',
        'sympy~=1.12',
    ],
    entry_points={
        'console_scripts': [
            'gauss-wolstenholme = gaussharmonic.run: main',
        ],
    },
)
